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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "socval/graph.hpp"

namespace socval {

/// Edge-list TSV.
///
///     # nodes=<n>
///     # <free-form provenance lines>
///     src<TAB>dst<TAB>weight
///     0<TAB>1<TAB>1
///
/// One line per undirected edge with src < dst, LF endings. The `nodes`
/// comment preserves trailing isolated nodes; without it the node count is
/// max id + 1.
std::string format_edge_list(const Graph& g, const std::vector<std::string>& comments = {});
Graph parse_edge_list(std::string_view contents);

void write_edge_list(const std::filesystem::path& path, const Graph& g,
                     const std::vector<std::string>& comments = {});
Graph read_edge_list(const std::filesystem::path& path);

} // namespace socval
