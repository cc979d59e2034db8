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
#include "socval/theory.hpp"

#include "socval/error.hpp"

namespace socval {

double expected_degree(const GraphFamilyParams& params) {
    validate(params);
    return std::visit(
        [](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, LatticeParams>) return static_cast<double>(s.k);
            else if constexpr (std::is_same_v<T, BarabasiAlbertParams>) return 2.0 * static_cast<double>(s.m);
            else return static_cast<double>(s.n) * s.p;
        },
        params.shape);
}

std::optional<double> degree_variance(const GraphFamilyParams& params) {
    validate(params);
    return std::visit(
        [](const auto& s) -> std::optional<double> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, LatticeParams>) return 0.0;
            else if constexpr (std::is_same_v<T, BarabasiAlbertParams>) return std::nullopt;
            else return static_cast<double>(s.n) * s.p * (1.0 - s.p);
        },
        params.shape);
}

TheoryPrediction expected_sv(const GraphFamilyParams& params, const Model& model, const CovariateMoments& moments) {
    validate(model);
    TheoryPrediction out;
    out.family = params.family();
    out.model_family = family(model);

    const double mean_degree = expected_degree(params);
    const auto var_degree = degree_variance(params);
    if (!var_degree) out.note = "variance undefined: power-law degree distribution";

    if (const auto* lm = std::get_if<LinearModel>(&model)) {
        out.expected_mean_sv = mean_degree * lm->beta_s;
        if (var_degree) out.expected_var_sv = lm->beta_s * lm->beta_s * *var_degree;
        return out;
    }
    const auto* im = std::get_if<InteractionModel>(&model);
    if (!im) throw UnsupportedFamilyError("no closed-form expectation for ensemble models");

    const std::size_t d = im->dims();
    if (moments.mean.size() != d || moments.variance.size() != d) {
        throw ParameterError("interaction expectation needs mean and variance for each of " + std::to_string(d) +
                             " covariates");
    }
    double mean_a = im->beta_s;
    double var_a = 0.0;
    for (std::size_t r = 0; r < d; ++r) {
        mean_a += im->beta_xs[r] * moments.mean[r];
        var_a += im->beta_xs[r] * im->beta_xs[r] * moments.variance[r];
    }
    out.expected_mean_sv = mean_degree * mean_a;
    if (var_degree) out.expected_var_sv = mean_degree * var_a + *var_degree * mean_a * mean_a;
    return out;
}

} // namespace socval
