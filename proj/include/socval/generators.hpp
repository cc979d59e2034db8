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
#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "socval/graph.hpp"

namespace socval {

struct LatticeParams {
    std::size_t n = 0;
    std::size_t k = 0; ///< even neighbor count, k < n
};

struct BarabasiAlbertParams {
    std::size_t n = 0;
    std::size_t m = 0; ///< edges attached per new node, 1 <= m < n
};

struct ErdosRenyiParams {
    std::size_t n = 0;
    double p = 0.0;
};

enum class GraphFamily { lattice, barabasi_albert, erdos_renyi };

struct GraphFamilyParams {
    std::variant<LatticeParams, BarabasiAlbertParams, ErdosRenyiParams> shape;
    std::uint64_t seed = 0;

    GraphFamily family() const { return static_cast<GraphFamily>(shape.index()); }
    std::size_t node_count() const;
};

/// "lattice", "ba", "er"
std::string family_tag(GraphFamily family);
GraphFamily parse_family(const std::string& tag);

/// Throws ParameterError when the parameters violate the family's domain.
void validate(const GraphFamilyParams& params);

/// Ring lattice: node i links to the k/2 nearest nodes on either side.
Graph generate_lattice(std::size_t n, std::size_t k);

/// Preferential attachment. The first m nodes form a path (m - 1 edges); each
/// later node attaches m distinct edges to earlier nodes, picked with
/// probability proportional to degree. Node m, which has exactly m
/// predecessors, links to all of them.
Graph generate_ba(std::size_t n, std::size_t m, std::uint64_t seed);

/// G(n, p) via geometric skipping over the pair index; O(n + edges).
Graph generate_er(std::size_t n, double p, std::uint64_t seed);

Graph generate(const GraphFamilyParams& params);

/// Number of edges the BA seed core contributes.
inline std::size_t ba_core_edge_count(std::size_t m) { return m == 0 ? 0 : m - 1; }
inline constexpr const char* ba_seed_core = "path";

} // namespace socval
