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
#include "socval/graph_io.hpp"

#include <algorithm>
#include <optional>

#include "socval/error.hpp"
#include "socval/text.hpp"

namespace socval {

namespace {
constexpr std::string_view kHeader = "src\tdst\tweight";
constexpr std::string_view kNodesKey = "# nodes=";
} // namespace

std::string format_edge_list(const Graph& g, const std::vector<std::string>& comments) {
    std::string out;
    out.reserve(32 + g.edge_count() * 16);
    out += kNodesKey;
    out += std::to_string(g.node_count());
    out += '\n';
    for (const auto& c : comments) {
        out += "# ";
        out += c;
        out += '\n';
    }
    out += kHeader;
    out += '\n';
    for (const Edge& e : g.edges()) {
        out += std::to_string(e.src);
        out += '\t';
        out += std::to_string(e.dst);
        out += '\t';
        out += text::format_double(e.weight);
        out += '\n';
    }
    return out;
}

Graph parse_edge_list(std::string_view contents) {
    const auto rows = text::lines(contents);
    std::size_t line_no = 0;
    std::optional<std::size_t> declared_nodes;
    while (line_no < rows.size() && rows[line_no].starts_with('#')) {
        if (rows[line_no].starts_with(kNodesKey)) {
            declared_nodes = text::parse_uint(rows[line_no].substr(kNodesKey.size()), "node count");
        }
        ++line_no;
    }
    if (line_no >= rows.size() || rows[line_no] != kHeader) {
        throw FormatError("edge list: expected header 'src<TAB>dst<TAB>weight'");
    }
    ++line_no;

    std::vector<Edge> edges;
    std::size_t max_id = 0;
    for (; line_no < rows.size(); ++line_no) {
        const auto row = rows[line_no];
        if (row.empty()) continue;
        const auto where = "edge list line " + std::to_string(line_no + 1);
        const auto fields = text::split(row, '\t');
        if (fields.size() != 3) throw FormatError(where + ": expected 3 tab-separated fields");
        const auto src = text::parse_uint(fields[0], where);
        const auto dst = text::parse_uint(fields[1], where);
        const double weight = text::parse_double(fields[2], where);
        if (src == dst) throw FormatError(where + ": self-loop on node " + std::to_string(src));
        if (src > dst) throw FormatError(where + ": edges must be stored with src < dst");
        if (weight <= 0.0) throw FormatError(where + ": weight must be positive");
        if (dst > UINT32_MAX) throw FormatError(where + ": node id out of range");
        max_id = std::max<std::size_t>(max_id, dst);
        edges.push_back({static_cast<NodeId>(src), static_cast<NodeId>(dst), weight});
    }

    std::size_t n = edges.empty() ? 0 : max_id + 1;
    if (declared_nodes) {
        if (!edges.empty() && *declared_nodes <= max_id) {
            throw FormatError("edge list: node id " + std::to_string(max_id) + " exceeds declared node count " +
                              std::to_string(*declared_nodes));
        }
        n = *declared_nodes;
    }
    try {
        return Graph::from_edges(n, edges);
    } catch (const ParameterError& e) {
        throw FormatError(std::string("edge list: ") + e.what());
    }
}

void write_edge_list(const std::filesystem::path& path, const Graph& g, const std::vector<std::string>& comments) {
    text::write_file(path, format_edge_list(g, comments));
}

Graph read_edge_list(const std::filesystem::path& path) { return parse_edge_list(text::read_file(path)); }

} // namespace socval
