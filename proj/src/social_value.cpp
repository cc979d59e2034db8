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
#include "socval/social_value.hpp"

#include <cmath>

#include "socval/error.hpp"
#include "socval/parallel.hpp"
#include "socval/stats.hpp"

namespace socval {

namespace {

void check_delta(const Graph& g, std::span<const double> dy) {
    if (dy.size() != g.node_count()) {
        throw ParameterError("delta vector has " + std::to_string(dy.size()) + " entries for a graph with " +
                             std::to_string(g.node_count()) + " nodes");
    }
    const auto deg = g.weighted_degrees();
    for (std::size_t j = 0; j < dy.size(); ++j) {
        if (deg[j] == 0.0 && dy[j] != 0.0) {
            throw InconsistentInputError("isolated node " + std::to_string(j) + " has nonzero delta " +
                                         std::to_string(dy[j]));
        }
    }
}

void check_table(const Graph& g, const CovariateTable& table) {
    if (!table.is_bound_to(g)) {
        throw InconsistentInputError("covariate table is not bound to this graph (S must equal weighted degree)");
    }
}

// out[i] = sum_k A_ik * v[k]
std::vector<double> spmv(const Graph& g, std::span<const double> v) {
    std::vector<double> out(g.node_count(), 0.0);
    const auto offsets = g.row_offsets();
    const auto cols = g.column_indices();
    const auto vals = g.values();
    parallel::for_ranges(out.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            double acc = 0.0;
            for (std::size_t k = offsets[i]; k < offsets[i + 1]; ++k) acc += vals[k] * v[cols[k]];
            out[i] = acc;
        }
    });
    return out;
}

} // namespace

std::vector<double> compute_sv(const Graph& g, std::span<const double> dy) {
    check_delta(g, dy);
    const auto deg = g.weighted_degrees();
    std::vector<double> sv(g.node_count(), 0.0);
    parallel::for_ranges(sv.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const auto node = static_cast<NodeId>(i);
            const auto nbrs = g.neighbors(node);
            const auto w = g.weights(node);
            double acc = 0.0;
            for (std::size_t k = 0; k < nbrs.size(); ++k) acc += w[k] * dy[nbrs[k]] / deg[nbrs[k]];
            sv[i] = acc;
        }
    });
    return sv;
}

std::vector<double> compute_sv_matrix(const Graph& g, std::span<const double> dy) {
    check_delta(g, dy);
    const auto deg = g.weighted_degrees();
    std::vector<double> scaled(dy.size());
    for (std::size_t j = 0; j < dy.size(); ++j) scaled[j] = deg[j] > 0.0 ? dy[j] / deg[j] : 0.0;
    return spmv(g, scaled);
}

std::vector<double> sv_closed_linear(const Graph& g, double beta_s) {
    const auto deg = g.weighted_degrees();
    std::vector<double> sv(deg.size());
    for (std::size_t i = 0; i < sv.size(); ++i) sv[i] = beta_s * deg[i];
    return sv;
}

std::vector<double> sv_closed_interaction(const Graph& g, const CovariateTable& table, const InteractionModel& model) {
    validate(Model{model});
    if (table.dims() != model.dims()) {
        throw ParameterError("model expects " + std::to_string(model.dims()) + " covariates, table has " +
                             std::to_string(table.dims()));
    }
    check_table(g, table);
    std::vector<double> per_node(table.node_count());
    for (std::size_t j = 0; j < per_node.size(); ++j) {
        const auto x = table.x(j);
        double acc = 0.0;
        for (std::size_t r = 0; r < x.size(); ++r) acc += model.beta_xs[r] * x[r];
        per_node[j] = acc + model.beta_s;
    }
    return spmv(g, per_node);
}

double gfp(const Graph& g, std::span<const double> sv) {
    if (sv.size() != g.node_count()) {
        throw ParameterError("SV vector has " + std::to_string(sv.size()) + " entries for a graph with " +
                             std::to_string(g.node_count()) + " nodes");
    }
    if (g.edge_count() == 0) throw UndefinedStatisticError("GFP is undefined for a graph without edges");
    double total = 0.0;
    std::size_t counted = 0;
    for (NodeId i = 0; i < g.node_count(); ++i) {
        const auto nbrs = g.neighbors(i);
        if (nbrs.empty()) continue;
        double diff = 0.0;
        for (NodeId j : nbrs) diff += sv[j] - sv[i];
        total += diff / static_cast<double>(nbrs.size());
        ++counted;
    }
    return total / static_cast<double>(counted);
}

double conservation_error(std::span<const double> dy, std::span<const double> sv) {
    double scale = 0.0;
    for (double v : dy) scale += std::abs(v);
    const double gap = std::abs(stats::sum(sv) - stats::sum(dy));
    return scale > 0.0 ? gap / scale : gap;
}

SvResult compute_social_value(const Graph& g, const CovariateTable& table, const Model& model, bool force_generic) {
    validate(model);
    check_table(g, table);
    SvResult result;
    if (force_generic) {
        result.delta_y = delta_y(model, table);
        result.sv = compute_sv(g, result.delta_y);
        result.path = "generic";
    } else if (const auto* lm = std::get_if<LinearModel>(&model)) {
        result.delta_y = delta_y_closed(model, table);
        result.sv = sv_closed_linear(g, lm->beta_s);
        result.path = "closed-linear";
    } else if (const auto* im = std::get_if<InteractionModel>(&model)) {
        result.delta_y = delta_y_closed(model, table);
        result.sv = sv_closed_interaction(g, table, *im);
        result.path = "closed-interaction";
    } else {
        result.delta_y = delta_y_ensemble_reduced(std::get<EnsembleModel>(model), table);
        result.sv = compute_sv_matrix(g, result.delta_y);
        result.path = "ensemble-reduced";
    }
    result.mean_sv = stats::mean(result.sv);
    result.var_sv = stats::population_variance(result.sv);
    if (g.edge_count() > 0) result.gfp = gfp(g, result.sv);
    result.conservation_error = conservation_error(result.delta_y, result.sv);
    return result;
}

} // namespace socval
