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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace socval {

using NodeId = std::uint32_t;

struct Edge {
    NodeId src = 0;
    NodeId dst = 0;
    double weight = 1.0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Weighted undirected graph in compressed sparse row form.
///
/// Each undirected edge is stored twice, once per endpoint, and every row is
/// sorted by neighbor id. Weights are strictly positive; there are no
/// self-loops and at most one edge per pair. Immutable after construction.
class Graph {
  public:
    Graph() : offsets_(1, 0) {}

    /// Builds a graph on nodes [0, n). Edges may be listed in either
    /// orientation; zero-weight edges are dropped. Throws ParameterError on
    /// out-of-range ids, self-loops, duplicate pairs, or negative/non-finite
    /// weights.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t node_count() const { return offsets_.size() - 1; }
    std::size_t edge_count() const { return targets_.size() / 2; }

    std::span<const NodeId> neighbors(NodeId i) const {
        return {targets_.data() + offsets_[i], targets_.data() + offsets_[i + 1]};
    }
    std::span<const double> weights(NodeId i) const {
        return {weights_.data() + offsets_[i], weights_.data() + offsets_[i + 1]};
    }
    std::size_t degree(NodeId i) const { return offsets_[i + 1] - offsets_[i]; }

    /// Sum of incident weights; 0 for isolated nodes. Throws IndexError.
    double weighted_degree(NodeId i) const;
    std::span<const double> weighted_degrees() const { return weighted_degree_; }

    bool has_unit_weights() const { return unit_weights_; }

    /// Undirected edge list with src < dst, sorted by (src, dst).
    std::vector<Edge> edges() const;

    std::span<const std::size_t> row_offsets() const { return offsets_; }
    std::span<const NodeId> column_indices() const { return targets_; }
    std::span<const double> values() const { return weights_; }

    friend bool operator==(const Graph&, const Graph&) = default;

  private:
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> targets_;
    std::vector<double> weights_;
    std::vector<double> weighted_degree_;
    bool unit_weights_ = true;
};

} // namespace socval
