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
#include "socval/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "socval/error.hpp"

namespace socval {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    if (n > static_cast<std::size_t>(UINT32_MAX)) throw ParameterError("node count exceeds 32-bit id range");

    Graph g;
    g.offsets_.assign(n + 1, 0);
    for (const Edge& e : edges) {
        if (e.src >= n || e.dst >= n) {
            throw ParameterError("edge (" + std::to_string(e.src) + ", " + std::to_string(e.dst) +
                                 ") references a node outside [0, " + std::to_string(n) + ")");
        }
        if (e.src == e.dst) throw ParameterError("self-loop on node " + std::to_string(e.src));
        if (!std::isfinite(e.weight) || e.weight < 0.0) {
            throw ParameterError("edge (" + std::to_string(e.src) + ", " + std::to_string(e.dst) +
                                 ") has invalid weight");
        }
        if (e.weight == 0.0) continue;
        ++g.offsets_[e.src + 1];
        ++g.offsets_[e.dst + 1];
    }
    std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());

    const std::size_t slots = g.offsets_.back();
    std::vector<std::pair<NodeId, double>> entries(slots);
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const Edge& e : edges) {
        if (e.weight == 0.0) continue;
        entries[cursor[e.src]++] = {e.dst, e.weight};
        entries[cursor[e.dst]++] = {e.src, e.weight};
    }

    g.targets_.resize(slots);
    g.weights_.resize(slots);
    g.weighted_degree_.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        auto first = entries.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]);
        auto last = entries.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]);
        std::sort(first, last, [](const auto& a, const auto& b) { return a.first < b.first; });
        double sum = 0.0;
        for (auto it = first; it != last; ++it) {
            if (it != first && std::prev(it)->first == it->first) {
                throw ParameterError("duplicate edge between nodes " + std::to_string(i) + " and " +
                                     std::to_string(it->first));
            }
            const auto slot = static_cast<std::size_t>(it - entries.begin());
            g.targets_[slot] = it->first;
            g.weights_[slot] = it->second;
            g.unit_weights_ = g.unit_weights_ && it->second == 1.0;
            sum += it->second;
        }
        g.weighted_degree_[i] = sum;
    }
    return g;
}

double Graph::weighted_degree(NodeId i) const {
    if (i >= node_count()) {
        throw IndexError("node " + std::to_string(i) + " out of range for graph with " +
                         std::to_string(node_count()) + " nodes");
    }
    return weighted_degree_[i];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (NodeId i = 0; i < node_count(); ++i) {
        const auto nbrs = neighbors(i);
        const auto w = weights(i);
        for (std::size_t k = 0; k < nbrs.size(); ++k) {
            if (nbrs[k] > i) out.push_back({i, nbrs[k], w[k]});
        }
    }
    return out;
}

} // namespace socval
