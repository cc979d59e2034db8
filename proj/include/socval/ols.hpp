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

#include <span>
#include <string>
#include <vector>

#include "socval/covariates.hpp"
#include "socval/models.hpp"

namespace socval {

/// Column layout of the least-squares design, which is also the layout of
/// serialized coefficients:
///
///   linear:      [1, x0..x{d-1}, S]
///   interaction: [1, x0..x{d-1}, S, x_r*x_q for r <= q (row-major upper
///                triangle), x_r*S]
///
/// For r < q the fitted x_r*x_q coefficient is B_rq + B_qr, so it is split
/// evenly across the symmetric beta_xx.
std::vector<std::string> design_columns(std::size_t d, ModelFamily family);
std::vector<double> design_coefficients(const Model& model);
Model model_from_design(ModelFamily family, std::size_t d, std::span<const double> coefficients);

struct FitReport {
    Model model;
    std::vector<std::string> columns;
    std::vector<double> coefficients;
    std::vector<double> standard_errors;
    double residual_variance = 0.0;
};

/// Least squares by column-pivoted Householder QR. A pivot counts as zero
/// when it is at most 1e-10 times the largest singular value of the design;
/// a rank-deficient design throws SingularFitError naming each dropped column
/// and the columns it is a combination of.
FitReport fit_ols(const CovariateTable& table, std::span<const double> y, ModelFamily family);

} // namespace socval
