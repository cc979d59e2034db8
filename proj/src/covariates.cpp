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
#include "socval/covariates.hpp"

#include <cmath>

#include "socval/error.hpp"
#include "socval/rng.hpp"
#include "socval/stats.hpp"
#include "socval/text.hpp"

namespace socval {

CovariateTable::CovariateTable(Matrix x, std::vector<double> s) : x_(std::move(x)), s_(std::move(s)) {
    if (s_.size() != x_.rows()) {
        throw ParameterError("covariate table: X has " + std::to_string(x_.rows()) + " rows but S has " +
                             std::to_string(s_.size()) + " entries");
    }
    for (std::size_t i = 0; i < s_.size(); ++i) {
        if (!(s_[i] >= 0.0) || !std::isfinite(s_[i])) {
            throw ParameterError("covariate table: S[" + std::to_string(i) + "] must be finite and nonnegative");
        }
    }
}

CovariateTable CovariateTable::bind(const Graph& g, Matrix x) {
    if (x.rows() != g.node_count()) {
        throw InconsistentInputError("covariate table has " + std::to_string(x.rows()) + " rows but graph has " +
                                     std::to_string(g.node_count()) + " nodes");
    }
    const auto deg = g.weighted_degrees();
    return CovariateTable(std::move(x), std::vector<double>(deg.begin(), deg.end()));
}

bool CovariateTable::is_bound_to(const Graph& g) const {
    if (node_count() != g.node_count()) return false;
    const auto deg = g.weighted_degrees();
    for (std::size_t i = 0; i < s_.size(); ++i)
        if (s_[i] != deg[i]) return false;
    return true;
}

Matrix sample_independent(std::size_t n, std::size_t d, double mean, double var, std::uint64_t seed) {
    if (!(var >= 0.0) || !std::isfinite(var) || !std::isfinite(mean)) {
        throw ParameterError("covariates: variance must be finite and nonnegative");
    }
    const double sd = std::sqrt(var);
    Rng rng(seed);
    Matrix x(n, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < d; ++c) x(i, c) = rng.normal(mean, sd);
    return x;
}

Matrix sample_correlated(const Graph& g, const CorrelationSpec& spec, std::uint64_t seed) {
    if (!(spec.noise_var >= 0.0) || !std::isfinite(spec.noise_var) || !std::isfinite(spec.c) ||
        !std::isfinite(spec.noise_mean)) {
        throw ParameterError("correlation spec: c and noise mean must be finite, noise variance >= 0");
    }
    const std::size_t n = g.node_count();
    Matrix x = sample_independent(n, 1, spec.noise_mean, spec.noise_var, seed);
    const auto deg = g.weighted_degrees();

    double centre = 0.0;
    double scale = 1.0;
    if (spec.standardize_degree && n > 0) {
        centre = stats::mean(deg);
        const double sd = std::sqrt(stats::population_variance(deg));
        if (sd > 0.0) scale = sd;
    }
    for (std::size_t i = 0; i < n; ++i) x(i, 0) += spec.c * ((deg[i] - centre) / scale);
    return x;
}

namespace {

// Parses `node,<cols...>` CSV whose first header field is "node". Returns the
// value columns in node order.
Matrix parse_node_table(std::string_view contents, std::size_t expected_nodes, std::string_view kind,
                        std::vector<std::string>* header_out) {
    const auto rows = text::lines(contents);
    if (rows.empty()) throw FormatError(std::string(kind) + ": empty file");
    const auto header = text::split(rows[0], ',');
    if (header.empty() || header[0] != "node" || header.size() < 2) {
        throw FormatError(std::string(kind) + ": header must start with 'node' followed by value columns");
    }
    if (header_out) header_out->assign(header.begin() + 1, header.end());
    const std::size_t cols = header.size() - 1;

    Matrix values(expected_nodes, cols);
    std::vector<char> seen(expected_nodes, 0);
    std::size_t count = 0;
    for (std::size_t line = 1; line < rows.size(); ++line) {
        if (rows[line].empty()) continue;
        const auto where = std::string(kind) + " line " + std::to_string(line + 1);
        const auto fields = text::split(rows[line], ',');
        if (fields.size() != cols + 1) throw FormatError(where + ": expected " + std::to_string(cols + 1) + " fields");
        const auto node = text::parse_uint(fields[0], where);
        if (node >= expected_nodes) {
            throw InconsistentInputError(where + ": node " + std::to_string(node) + " is not in the graph (" +
                                         std::to_string(expected_nodes) + " nodes)");
        }
        if (seen[node]) throw FormatError(where + ": duplicate row for node " + std::to_string(node));
        seen[node] = 1;
        ++count;
        for (std::size_t c = 0; c < cols; ++c) values(node, c) = text::parse_double(fields[c + 1], where);
    }
    if (count != expected_nodes) {
        for (std::size_t i = 0; i < expected_nodes; ++i) {
            if (!seen[i]) {
                throw InconsistentInputError(std::string(kind) + ": missing row for node " + std::to_string(i) + " (" +
                                             std::to_string(count) + " rows for " + std::to_string(expected_nodes) +
                                             " nodes)");
            }
        }
    }
    return values;
}

} // namespace

std::string format_covariates(const Matrix& x) {
    std::string out = "node";
    for (std::size_t c = 0; c < x.cols(); ++c) out += ",x" + std::to_string(c);
    out += '\n';
    for (std::size_t i = 0; i < x.rows(); ++i) {
        out += std::to_string(i);
        for (double v : x.row(i)) {
            out += ',';
            out += text::format_double(v);
        }
        out += '\n';
    }
    return out;
}

Matrix parse_covariates(std::string_view contents, std::size_t expected_nodes) {
    std::vector<std::string> header;
    Matrix x = parse_node_table(contents, expected_nodes, "covariates", &header);
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (header[c] != "x" + std::to_string(c)) {
            throw FormatError("covariates: column " + std::to_string(c + 1) + " must be named x" + std::to_string(c));
        }
    }
    return x;
}

std::string format_targets(std::span<const double> y) {
    std::string out = "node,y\n";
    for (std::size_t i = 0; i < y.size(); ++i) {
        out += std::to_string(i);
        out += ',';
        out += text::format_double(y[i]);
        out += '\n';
    }
    return out;
}

std::vector<double> parse_targets(std::string_view contents, std::size_t expected_nodes) {
    std::vector<std::string> header;
    const Matrix y = parse_node_table(contents, expected_nodes, "targets", &header);
    if (header.size() != 1 || header[0] != "y") throw FormatError("targets: header must be 'node,y'");
    return {y.data().begin(), y.data().end()};
}

Matrix read_covariates(const std::filesystem::path& path, std::size_t expected_nodes) {
    return parse_covariates(text::read_file(path), expected_nodes);
}

std::vector<double> read_targets(const std::filesystem::path& path, std::size_t expected_nodes) {
    return parse_targets(text::read_file(path), expected_nodes);
}

} // namespace socval
