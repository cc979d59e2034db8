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

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "socval/covariates.hpp"
#include "socval/matrix.hpp"

namespace socval {

/// y = beta0 + beta . x + beta_s * s
struct LinearModel {
    double beta0 = 0.0;
    std::vector<double> beta;
    double beta_s = 0.0;

    std::size_t dims() const { return beta.size(); }
};

/// Linear model plus the quadratic form x' B x and the social interaction
/// s * (beta_xs . x). B (beta_xx) is symmetric d x d; the intercept never
/// enters an interaction.
struct InteractionModel {
    double beta0 = 0.0;
    std::vector<double> beta;
    double beta_s = 0.0;
    Matrix beta_xx;
    std::vector<double> beta_xs;

    std::size_t dims() const { return beta.size(); }
};

/// One-split decision tree over either an asocial column or S.
struct Stump {
    static constexpr std::size_t social = std::numeric_limits<std::size_t>::max();

    std::size_t feature = 0;
    double threshold = 0.0;
    double left = 0.0;  ///< value when feature < threshold
    double right = 0.0; ///< value otherwise

    bool reads_social() const { return feature == social; }

    double operator()(std::span<const double> x, double s) const {
        const double v = reads_social() ? s : x[feature];
        return v < threshold ? left : right;
    }
};

/// True when the stump's output changes between two probe values of S on
/// either side of its threshold, with x held fixed.
bool responds_to_social(const Stump& h, std::span<const double> x);

struct EnsembleMember {
    double gamma = 1.0;
    Stump model;
    bool uses_s = false;
};

/// F(x, s) = constant + sum_m gamma_m * h_m(x, s)
class EnsembleModel {
  public:
    /// Throws ParameterError when a member's declared uses_s disagrees with
    /// the stump (declared false but responds to S under probing, or declared
    /// true for a stump that never reads S) or a feature index is >= dims.
    EnsembleModel(std::size_t dims, double constant, std::vector<EnsembleMember> members);

    std::size_t dims() const { return dims_; }
    double constant() const { return constant_; }
    const std::vector<EnsembleMember>& members() const { return members_; }
    std::size_t social_member_count() const;

  private:
    std::size_t dims_;
    double constant_;
    std::vector<EnsembleMember> members_;
};

using Model = std::variant<LinearModel, InteractionModel, EnsembleModel>;

enum class ModelFamily { linear, interaction, ensemble };

ModelFamily family(const Model& model);
std::string family_tag(ModelFamily family);
ModelFamily parse_model_family(const std::string& tag);
std::size_t dims(const Model& model);

/// Checks internal shapes (beta_xx is d x d and symmetric, beta_xs has d
/// entries). Throws ParameterError.
void validate(const Model& model);

/// Base-model call counter for ensemble evaluation, split by whether the
/// called stump reads S.
struct EvalCounter {
    std::atomic<std::uint64_t> social_calls{0};
    std::atomic<std::uint64_t> asocial_calls{0};
};

double predict(const Model& model, std::span<const double> x, double s);

/// Generic synthetic-control delta: F(x_j, S_j) - F(x_j, 0) for every node,
/// by two full model evaluations.
std::vector<double> delta_y(const Model& model, const CovariateTable& table, EvalCounter* counter = nullptr);

/// Algebraic shortcut: beta_s * S_j (linear) or S_j * (beta_xs . x_j +
/// beta_s) (interaction). Throws UnsupportedFamilyError for ensembles.
std::vector<double> delta_y_closed(const Model& model, const CovariateTable& table);

/// Sum over S-reading members only of gamma_m * (h_m(x, S) - h_m(x, 0)).
/// Members that ignore S are never evaluated.
std::vector<double> delta_y_ensemble_reduced(const EnsembleModel& model, const CovariateTable& table,
                                             EvalCounter* counter = nullptr);

} // namespace socval
