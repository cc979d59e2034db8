/*
Copyright 2026 The socval Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#include "socval/generators.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "socval/error.hpp"
#include "socval/rng.hpp"

namespace socval {

std::size_t GraphFamilyParams::node_count() const {
    return std::visit([](const auto& s) { return s.n; }, shape);
}

std::string family_tag(GraphFamily family) {
    switch (family) {
    case GraphFamily::lattice: return "lattice";
    case GraphFamily::barabasi_albert: return "ba";
    case GraphFamily::erdos_renyi: return "er";
    }
    return "unknown";
}

GraphFamily parse_family(const std::string& tag) {
    if (tag == "lattice") return GraphFamily::lattice;
    if (tag == "ba") return GraphFamily::barabasi_albert;
    if (tag == "er") return GraphFamily::erdos_renyi;
    throw ParameterError("unknown graph family '" + tag + "' (expected lattice, ba or er)");
}

namespace {

void check_lattice(std::size_t n, std::size_t k) {
    if (k % 2 != 0) throw ParameterError("lattice: k must be even, got " + std::to_string(k));
    if (k == 0) throw ParameterError("lattice: k must be positive");
    if (k >= n) throw ParameterError("lattice: k must be smaller than n");
}

void check_ba(std::size_t n, std::size_t m) {
    if (m < 1) throw ParameterError("ba: m must be at least 1");
    if (m >= n) throw ParameterError("ba: m must be smaller than n");
}

void check_er(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("er: p must lie in [0, 1]");
}

} // namespace

void validate(const GraphFamilyParams& params) {
    std::visit(
        [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, LatticeParams>) check_lattice(s.n, s.k);
            else if constexpr (std::is_same_v<T, BarabasiAlbertParams>) check_ba(s.n, s.m);
            else check_er(s.p);
        },
        params.shape);
}

Graph generate_lattice(std::size_t n, std::size_t k) {
    check_lattice(n, k);
    std::vector<Edge> edges;
    edges.reserve(n * k / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t offset = 1; offset <= k / 2; ++offset) {
            edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>((i + offset) % n), 1.0});
        }
    }
    return Graph::from_edges(n, edges);
}

Graph generate_ba(std::size_t n, std::size_t m, std::uint64_t seed) {
    check_ba(n, m);
    Rng rng(seed);

    std::vector<Edge> edges;
    edges.reserve(ba_core_edge_count(m) + m * (n - m));
    // every edge contributes both endpoints, so a uniform draw from this list
    // picks a node with probability proportional to its degree
    std::vector<NodeId> endpoints;
    endpoints.reserve(2 * edges.capacity());

    auto link = [&](NodeId a, NodeId b) {
        edges.push_back({a, b, 1.0});
        endpoints.push_back(a);
        endpoints.push_back(b);
    };

    for (NodeId v = 1; v < m; ++v) link(v - 1, v);

    std::vector<NodeId> targets;
    targets.reserve(m);
    for (std::size_t v = m; v < n; ++v) {
        targets.clear();
        if (v == m) {
            for (NodeId u = 0; u < m; ++u) targets.push_back(u);
        } else {
            while (targets.size() < m) {
                const NodeId pick = endpoints[rng.below(endpoints.size())];
                if (std::find(targets.begin(), targets.end(), pick) == targets.end()) targets.push_back(pick);
            }
        }
        for (NodeId u : targets) link(u, static_cast<NodeId>(v));
    }
    return Graph::from_edges(n, edges);
}

Graph generate_er(std::size_t n, double p, std::uint64_t seed) {
    check_er(p);
    std::vector<Edge> edges;
    if (n < 2 || p == 0.0) return Graph::from_edges(n, edges);

    if (p == 1.0) {
        edges.reserve(n * (n - 1) / 2);
        for (NodeId v = 1; v < n; ++v)
            for (NodeId w = 0; w < v; ++w) edges.push_back({w, v, 1.0});
        return Graph::from_edges(n, edges);
    }

    // Pairs (v, w) with w < v are enumerated row by row; the gap to the next
    // present pair is geometric with success probability p.
    Rng rng(seed);
    const double log_q = std::log1p(-p);
    const double expected = p * static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
    edges.reserve(static_cast<std::size_t>(expected * 1.1) + 16);

    std::size_t v = 1;
    double w = -1.0;
    while (v < n) {
        const double r = rng.uniform();
        w += 1.0 + std::floor(std::log1p(-r) / log_q);
        while (v < n && w >= static_cast<double>(v)) {
            w -= static_cast<double>(v);
            ++v;
        }
        if (v < n) edges.push_back({static_cast<NodeId>(w), static_cast<NodeId>(v), 1.0});
    }
    return Graph::from_edges(n, edges);
}

Graph generate(const GraphFamilyParams& params) {
    return std::visit(
        [&](const auto& s) -> Graph {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, LatticeParams>) return generate_lattice(s.n, s.k);
            else if constexpr (std::is_same_v<T, BarabasiAlbertParams>) return generate_ba(s.n, s.m, params.seed);
            else return generate_er(s.n, s.p, params.seed);
        },
        params.shape);
}

} // namespace socval
