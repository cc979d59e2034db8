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

#include <optional>
#include <string>
#include <vector>

#include "socval/generators.hpp"
#include "socval/models.hpp"

namespace socval {

/// Means and variances of independent asocial covariate columns.
struct CovariateMoments {
    std::vector<double> mean;
    std::vector<double> variance;
};

struct TheoryPrediction {
    GraphFamily family = GraphFamily::lattice;
    ModelFamily model_family = ModelFamily::linear;
    double expected_mean_sv = 0.0;
    /// Absent for preferential-attachment graphs, whose power-law degree
    /// distribution has no finite variance in the large-n limit.
    std::optional<double> expected_var_sv;
    std::string note;
};

/// Expected degree: k, 2m, np.
double expected_degree(const GraphFamilyParams& params);
/// Degree variance: 0 (lattice), np(1 - p) (ER), absent (BA).
std::optional<double> degree_variance(const GraphFamilyParams& params);

/// Expected mean SV for unit-weight graphs.
///
///   linear:      E[S] * beta_s,    Var = beta_s^2 Var(S)
///   interaction: E[S] * (beta_xs . mu_X + beta_s)
///
/// For the interaction model each neighbor contributes a_j = beta_xs . x_j +
/// beta_s independently of the node's own degree, so
/// Var(SV) = E[S] Var(a) + Var(S) E[a]^2.
///
/// Throws UnsupportedFamilyError for ensembles and ParameterError when the
/// moments do not match the model's covariate count.
TheoryPrediction expected_sv(const GraphFamilyParams& params, const Model& model, const CovariateMoments& moments = {});

} // namespace socval
