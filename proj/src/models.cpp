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
#include "socval/models.hpp"

#include <algorithm>
#include <cmath>

#include "socval/error.hpp"
#include "socval/parallel.hpp"

namespace socval {

bool responds_to_social(const Stump& h, std::span<const double> x) {
    const double below = h.threshold - std::max(1.0, std::abs(h.threshold));
    return h(x, below) != h(x, h.threshold);
}

EnsembleModel::EnsembleModel(std::size_t dims, double constant, std::vector<EnsembleMember> members)
    : dims_(dims), constant_(constant), members_(std::move(members)) {
    const std::vector<double> probe_x(dims_, 0.0);
    for (std::size_t m = 0; m < members_.size(); ++m) {
        const auto& member = members_[m];
        const auto where = "ensemble member " + std::to_string(m);
        if (!member.model.reads_social() && member.model.feature >= dims_) {
            throw ParameterError(where + ": feature index " + std::to_string(member.model.feature) +
                                 " out of range for " + std::to_string(dims_) + " covariates");
        }
        if (!member.uses_s && responds_to_social(member.model, probe_x)) {
            throw ParameterError(where + ": declared S-free but responds to S");
        }
        if (member.uses_s && !member.model.reads_social()) {
            throw ParameterError(where + ": declared to use S but never reads it");
        }
    }
}

std::size_t EnsembleModel::social_member_count() const {
    return static_cast<std::size_t>(
        std::count_if(members_.begin(), members_.end(), [](const auto& m) { return m.uses_s; }));
}

ModelFamily family(const Model& model) { return static_cast<ModelFamily>(model.index()); }

std::string family_tag(ModelFamily family) {
    switch (family) {
    case ModelFamily::linear: return "linear";
    case ModelFamily::interaction: return "interaction";
    case ModelFamily::ensemble: return "ensemble";
    }
    return "unknown";
}

ModelFamily parse_model_family(const std::string& tag) {
    if (tag == "linear") return ModelFamily::linear;
    if (tag == "interaction") return ModelFamily::interaction;
    if (tag == "ensemble") return ModelFamily::ensemble;
    throw ParameterError("unknown model family '" + tag + "' (expected linear, interaction or ensemble)");
}

std::size_t dims(const Model& model) {
    return std::visit([](const auto& m) { return m.dims(); }, model);
}

void validate(const Model& model) {
    const auto* im = std::get_if<InteractionModel>(&model);
    if (!im) return;
    const std::size_t d = im->dims();
    if (im->beta_xx.rows() != d || im->beta_xx.cols() != d) {
        throw ParameterError("interaction model: beta_xx must be " + std::to_string(d) + " x " + std::to_string(d));
    }
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t q = r + 1; q < d; ++q)
            if (im->beta_xx(r, q) != im->beta_xx(q, r)) throw ParameterError("interaction model: beta_xx must be symmetric");
    if (im->beta_xs.size() != d) {
        throw ParameterError("interaction model: beta_xs must have " + std::to_string(d) + " entries");
    }
}

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

void check_dims(std::size_t expected, std::size_t got) {
    if (expected != got) {
        throw ParameterError("model expects " + std::to_string(expected) + " covariates, got " + std::to_string(got));
    }
}

double evaluate(const LinearModel& m, std::span<const double> x, double s, std::uint64_t*, std::uint64_t*) {
    return m.beta0 + dot(m.beta, x) + m.beta_s * s;
}

double evaluate(const InteractionModel& m, std::span<const double> x, double s, std::uint64_t*, std::uint64_t*) {
    double quad = 0.0;
    for (std::size_t r = 0; r < x.size(); ++r)
        for (std::size_t q = 0; q < x.size(); ++q) quad += m.beta_xx(r, q) * x[r] * x[q];
    return m.beta0 + dot(m.beta, x) + m.beta_s * s + quad + s * dot(m.beta_xs, x);
}

double evaluate(const EnsembleModel& m, std::span<const double> x, double s, std::uint64_t* social,
                std::uint64_t* asocial) {
    double acc = m.constant();
    for (const auto& member : m.members()) {
        acc += member.gamma * member.model(x, s);
        ++*(member.uses_s ? social : asocial);
    }
    return acc;
}

void add_counts(EvalCounter* counter, std::uint64_t social, std::uint64_t asocial) {
    if (!counter) return;
    counter->social_calls.fetch_add(social, std::memory_order_relaxed);
    counter->asocial_calls.fetch_add(asocial, std::memory_order_relaxed);
}

} // namespace

double predict(const Model& model, std::span<const double> x, double s) {
    check_dims(dims(model), x.size());
    std::uint64_t social = 0, asocial = 0;
    return std::visit([&](const auto& m) { return evaluate(m, x, s, &social, &asocial); }, model);
}

std::vector<double> delta_y(const Model& model, const CovariateTable& table, EvalCounter* counter) {
    check_dims(dims(model), table.dims());
    std::vector<double> dy(table.node_count());
    std::visit(
        [&](const auto& m) {
            parallel::for_ranges(dy.size(), [&](std::size_t begin, std::size_t end) {
                std::uint64_t social = 0, asocial = 0;
                for (std::size_t j = begin; j < end; ++j) {
                    const auto x = table.x(j);
                    dy[j] = evaluate(m, x, table.s(j), &social, &asocial) - evaluate(m, x, 0.0, &social, &asocial);
                }
                add_counts(counter, social, asocial);
            });
        },
        model);
    return dy;
}

std::vector<double> delta_y_closed(const Model& model, const CovariateTable& table) {
    check_dims(dims(model), table.dims());
    std::vector<double> dy(table.node_count());
    if (const auto* lm = std::get_if<LinearModel>(&model)) {
        for (std::size_t j = 0; j < dy.size(); ++j) dy[j] = lm->beta_s * table.s(j);
    } else if (const auto* im = std::get_if<InteractionModel>(&model)) {
        for (std::size_t j = 0; j < dy.size(); ++j) dy[j] = table.s(j) * (dot(im->beta_xs, table.x(j)) + im->beta_s);
    } else {
        throw UnsupportedFamilyError("closed-form delta is defined for linear and interaction models only; "
                                     "use the reduced ensemble path");
    }
    return dy;
}

std::vector<double> delta_y_ensemble_reduced(const EnsembleModel& model, const CovariateTable& table,
                                             EvalCounter* counter) {
    check_dims(model.dims(), table.dims());
    std::vector<const EnsembleMember*> social;
    for (const auto& member : model.members())
        if (member.uses_s) social.push_back(&member);

    std::vector<double> dy(table.node_count(), 0.0);
    parallel::for_ranges(dy.size(), [&](std::size_t begin, std::size_t end) {
        std::uint64_t calls = 0;
        for (std::size_t j = begin; j < end; ++j) {
            const auto x = table.x(j);
            double acc = 0.0;
            for (const auto* member : social) {
                acc += member->gamma * (member->model(x, table.s(j)) - member->model(x, 0.0));
                calls += 2;
            }
            dy[j] = acc;
        }
        add_counts(counter, calls, 0);
    });
    return dy;
}

} // namespace socval
