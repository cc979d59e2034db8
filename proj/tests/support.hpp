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

#include <unistd.h>

#include <atomic>
#include <cmath>
#include <filesystem>
#include <string>
#include <vector>

#include "socval/graph.hpp"
#include "socval/rng.hpp"

namespace socval::testing {

inline std::vector<Edge> edge_list(std::initializer_list<std::pair<NodeId, NodeId>> pairs, double w = 1.0) {
    std::vector<Edge> out;
    for (auto [a, b] : pairs) out.push_back({a, b, w});
    return out;
}

inline Graph triangle() {
    const auto e = edge_list({{0, 1}, {1, 2}, {0, 2}});
    return Graph::from_edges(3, e);
}

inline Graph path3() {
    const auto e = edge_list({{0, 1}, {1, 2}});
    return Graph::from_edges(3, e);
}

/// Node 0 is the center.
inline Graph star(NodeId leaves, double w = 1.0) {
    std::vector<Edge> e;
    for (NodeId l = 1; l <= leaves; ++l) e.push_back({0, l, w});
    return Graph::from_edges(leaves + 1, e);
}

/// Random simple graph with weights drawn from (0.1, 3.1), or unit weights.
inline Graph random_graph(Rng& rng, std::size_t n, double p, bool weighted) {
    std::vector<Edge> e;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j)
            if (rng.uniform() < p) e.push_back({i, j, weighted ? 0.1 + 3.0 * rng.uniform() : 1.0});
    return Graph::from_edges(n, e);
}

inline double rel_dev(double a, double b) { return std::abs(a - b) / (1.0 + std::abs(a)); }

inline double max_rel_dev(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, rel_dev(a[i], b[i]));
    return worst;
}

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
  public:
    TempDir() {
        static std::atomic<unsigned> counter{0};
        path_ = std::filesystem::temp_directory_path() /
                ("socval_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    const std::filesystem::path& path() const { return path_; }
    std::string operator/(const std::string& name) const { return (path_ / name).string(); }

  private:
    std::filesystem::path path_;
};

} // namespace socval::testing
