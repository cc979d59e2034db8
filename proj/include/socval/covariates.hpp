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
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "socval/graph.hpp"
#include "socval/matrix.hpp"

namespace socval {

/// Per-node asocial covariates X (n x d) and the social variable S.
class CovariateTable {
  public:
    /// Unbound table with an explicit social column, e.g. for fitting from
    /// external data. Throws ParameterError on shape mismatch or negative S.
    CovariateTable(Matrix x, std::vector<double> s);

    /// Table whose social column is the weighted degree of `g`.
    static CovariateTable bind(const Graph& g, Matrix x);

    std::size_t node_count() const { return x_.rows(); }
    std::size_t dims() const { return x_.cols(); }

    const Matrix& x() const { return x_; }
    std::span<const double> x(std::size_t node) const { return x_.row(node); }
    std::span<const double> s() const { return s_; }
    double s(std::size_t node) const { return s_[node]; }

    /// True when S equals the weighted degree of `g` node for node.
    bool is_bound_to(const Graph& g) const;

  private:
    Matrix x_;
    std::vector<double> s_;
};

struct CorrelationSpec {
    double c = 0.0;          ///< slope on the social variable
    double noise_mean = 0.0; ///< mean of the residual f
    double noise_var = 1.0;  ///< variance of the residual f, >= 0
    /// Apply c to the z-scored degree instead of the raw degree.
    bool standardize_degree = false;
};

/// i.i.d. N(mean, var) entries. Throws ParameterError when var < 0.
Matrix sample_independent(std::size_t n, std::size_t d, double mean, double var, std::uint64_t seed);

/// Single column x_j = c * S_j + f_j with f_j ~ N(noise_mean, noise_var).
/// The residual stream matches sample_independent(n, 1, noise_mean,
/// noise_var, seed), so c = 0 reproduces it exactly.
Matrix sample_correlated(const Graph& g, const CorrelationSpec& spec, std::uint64_t seed);

/// CSV with header `node,x0,x1,...`. S is never written.
std::string format_covariates(const Matrix& x);
/// Parses a covariate CSV. Rows may appear in any order but every node id in
/// [0, expected_nodes) must appear exactly once.
Matrix parse_covariates(std::string_view contents, std::size_t expected_nodes);

/// CSV with header `node,y`.
std::string format_targets(std::span<const double> y);
std::vector<double> parse_targets(std::string_view contents, std::size_t expected_nodes);

Matrix read_covariates(const std::filesystem::path& path, std::size_t expected_nodes);
std::vector<double> read_targets(const std::filesystem::path& path, std::size_t expected_nodes);

} // namespace socval
