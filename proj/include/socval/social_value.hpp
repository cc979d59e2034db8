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
#include <span>
#include <string>
#include <vector>

#include "socval/covariates.hpp"
#include "socval/graph.hpp"
#include "socval/models.hpp"

namespace socval {

/// SV(i) = sum over neighbors j of w_ij * dy[j] / deg_w(j), accumulated in
/// ascending neighbor order.
///
/// Throws ParameterError when dy.size() != node count and
/// InconsistentInputError when an isolated node carries a nonzero delta.
std::vector<double> compute_sv(const Graph& g, std::span<const double> dy);

/// Same quantity as a sparse product A * (dy / deg_w), with 0/0 taken as 0
/// for isolated nodes.
std::vector<double> compute_sv_matrix(const Graph& g, std::span<const double> dy);

/// Linear-model shortcut: beta_s * deg_w(i). No neighbor traversal.
std::vector<double> sv_closed_linear(const Graph& g, double beta_s);

/// Interaction-model shortcut. The neighbor degree cancels, leaving
/// A * (beta_xs . x_j + beta_s). `table` must be bound to `g`.
std::vector<double> sv_closed_interaction(const Graph& g, const CovariateTable& table, const InteractionModel& model);

/// Generalized friendship paradox: mean over nodes with at least one neighbor
/// of (mean neighbor SV - own SV). Throws UndefinedStatisticError for a graph
/// without edges.
double gfp(const Graph& g, std::span<const double> sv);

/// |sum(sv) - sum(dy)| / sum(|dy|); 0 when every delta is 0 and SV sums to 0.
double conservation_error(std::span<const double> dy, std::span<const double> sv);

struct SvResult {
    std::vector<double> delta_y;
    std::vector<double> sv;
    double mean_sv = 0.0;
    double var_sv = 0.0; ///< population variance across nodes
    std::optional<double> gfp;
    std::string path; ///< which evaluation route produced delta_y and sv
    double conservation_error = 0.0;
};

/// Runs model -> delta -> distribution for a table bound to `g`. The fastest
/// exact route is chosen per model family unless `force_generic` is set, in
/// which case delta_y is evaluated by two full predictions and distributed by
/// compute_sv.
SvResult compute_social_value(const Graph& g, const CovariateTable& table, const Model& model,
                              bool force_generic = false);

} // namespace socval
