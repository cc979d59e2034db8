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
#include "socval/experiments.hpp"

#include <cmath>
#include <set>

#include "socval/covariates.hpp"
#include "socval/error.hpp"
#include "socval/parallel.hpp"
#include "socval/rng.hpp"
#include "socval/text.hpp"

namespace socval {

using nlohmann::json;

std::vector<double> Grid::values() const {
    std::vector<double> out;
    out.reserve(steps);
    if (steps == 1) {
        out.push_back(min);
        return out;
    }
    for (std::size_t i = 0; i < steps; ++i) {
        out.push_back(i + 1 == steps ? max : min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1));
    }
    return out;
}

GraphFamilyParams FamilyShapes::params(GraphFamily family, std::uint64_t seed) const {
    GraphFamilyParams p;
    p.seed = seed;
    switch (family) {
    case GraphFamily::lattice: p.shape = LatticeParams{n, lattice_k}; break;
    case GraphFamily::barabasi_albert: p.shape = BarabasiAlbertParams{n, ba_m}; break;
    case GraphFamily::erdos_renyi: p.shape = ErdosRenyiParams{n, er_p}; break;
    }
    return p;
}

namespace {

constexpr GraphFamily kAllFamilies[] = {GraphFamily::lattice, GraphFamily::barabasi_albert, GraphFamily::erdos_renyi};

void check_grid(const Grid& g, const char* name) {
    if (g.steps == 0 || !std::isfinite(g.min) || !std::isfinite(g.max) || g.min > g.max) {
        throw ParameterError(std::string(name) + ": grid needs at least one step and finite min <= max");
    }
}

void check_shapes(const FamilyShapes& shapes, const std::vector<GraphFamily>& families) {
    for (GraphFamily f : families) validate(shapes.params(f, 0));
}

void check_finite(double v, const char* name) {
    if (!std::isfinite(v)) throw ParameterError(std::string(name) + " must be finite");
}

} // namespace

// ---------------------------------------------------------------------------

const DistributionRun& DistributionReport::find(GraphFamily family, ModelFamily model) const {
    for (const auto& run : runs)
        if (run.family == family && run.model == model) return run;
    throw ParameterError("no run for " + family_tag(family) + " / " + family_tag(model));
}

void validate(const DistributionConfig& config) {
    check_shapes(config.shapes, {std::begin(kAllFamilies), std::end(kAllFamilies)});
    if (!(config.x_var >= 0.0)) throw ParameterError("x_var must be nonnegative");
    if (!(config.bin_width > 0.0)) throw ParameterError("bin_width must be positive");
    check_finite(config.x_mean, "x_mean");
    check_finite(config.linear_beta_s, "linear_beta_s");
    check_finite(config.interaction_beta_s, "interaction_beta_s");
    check_finite(config.interaction_beta_xs, "interaction_beta_xs");
}

DistributionReport run_distribution_experiment(const DistributionConfig& config) {
    validate(config);
    // The asocial main effect cancels from every delta; it is set to 1 so the
    // models are not degenerate in x.
    const Model linear = LinearModel{0.0, {1.0}, config.linear_beta_s};
    const Model interaction =
        InteractionModel{0.0, {1.0}, config.interaction_beta_s, Matrix(1, 1), {config.interaction_beta_xs}};

    DistributionReport report;
    for (std::size_t f = 0; f < std::size(kAllFamilies); ++f) {
        const GraphFamily family = kAllFamilies[f];
        const std::uint64_t graph_seed = derive_seed(config.seed, f, 0);
        const std::uint64_t covariate_seed = derive_seed(config.seed, f, 1);
        const Graph g = generate(config.shapes.params(family, graph_seed));
        const auto table = CovariateTable::bind(
            g, sample_independent(g.node_count(), 1, config.x_mean, config.x_var, covariate_seed));
        const auto deg = g.weighted_degrees();
        for (const Model* model : {&linear, &interaction}) {
            DistributionRun run;
            run.family = family;
            run.model = socval::family(*model);
            run.graph_seed = graph_seed;
            run.covariate_seed = covariate_seed;
            run.degree.assign(deg.begin(), deg.end());
            run.result = compute_social_value(g, table, *model);
            report.max_conservation_error = std::max(report.max_conservation_error, run.result.conservation_error);
            report.runs.push_back(std::move(run));
        }
    }

    // shared bins per model family so histograms are comparable across graphs
    for (ModelFamily model : {ModelFamily::linear, ModelFamily::interaction}) {
        double lo = INFINITY, hi = -INFINITY;
        for (const auto& run : report.runs) {
            if (run.model != model) continue;
            for (double v : run.result.sv) {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        }
        const double origin = std::floor(lo / config.bin_width) * config.bin_width;
        const auto bins = static_cast<std::size_t>(std::floor((hi - origin) / config.bin_width)) + 1;
        for (auto& run : report.runs) {
            if (run.model == model) run.histogram = stats::histogram(run.result.sv, origin, config.bin_width, bins);
        }
    }
    return report;
}

// ---------------------------------------------------------------------------

void validate(const SweepConfig& config) {
    if (config.families.empty()) throw ParameterError("sweep: at least one graph family is required");
    check_shapes(config.shapes, config.families);
    check_grid(config.coefficient, "coefficient_grid");
    check_grid(config.correlation, "c_grid");
    if (config.replicates < 1) throw ParameterError("sweep: replicates must be at least 1");
    if (!(config.noise_var >= 0.0)) throw ParameterError("sweep: noise_var must be nonnegative");
    check_finite(config.noise_mean, "noise_mean");
    check_finite(config.beta0, "beta0");
    check_finite(config.beta, "beta");
    check_finite(config.beta_s, "beta_s");
    check_finite(config.beta_xs, "beta_xs");
}

CellSample run_sweep_replicate(const SweepConfig& config, GraphFamily, const Graph& graph, double coefficient,
                               double c, std::uint64_t covariate_seed) {
    const CorrelationSpec spec{c, config.noise_mean, config.noise_var, config.standardize_degree};
    const auto table = CovariateTable::bind(graph, sample_correlated(graph, spec, covariate_seed));
    const bool sweep_xs = config.swept == SweptCoefficient::beta_xs;
    const Model model = InteractionModel{config.beta0, {config.beta}, sweep_xs ? config.beta_s : coefficient,
                                         Matrix(1, 1), {sweep_xs ? coefficient : config.beta_xs}};
    const SvResult r = compute_social_value(graph, table, model);
    if (!r.gfp) throw UndefinedStatisticError("sweep: generated graph has no edges, GFP undefined");
    return {r.mean_sv, std::sqrt(r.var_sv), *r.gfp, r.conservation_error};
}

std::vector<SweepResult> run_heatmap_sweep(const SweepConfig& config) {
    validate(config);
    const auto coefficients = config.coefficient.values();
    const auto correlations = config.correlation.values();
    const std::size_t cell_count = coefficients.size() * correlations.size();
    const std::size_t reps = config.replicates;

    std::vector<SweepResult> results;
    for (GraphFamily family : config.families) {
        const auto family_index = static_cast<std::uint64_t>(family);

        std::vector<Graph> shared;
        if (config.shared_graphs) {
            shared.resize(reps);
            parallel::for_each_index(reps, [&](std::size_t r) {
                shared[r] = generate(config.shapes.params(family, derive_seed(config.seed, family_index, r, 0)));
            });
        }

        SweepResult result;
        result.family = family;
        result.coefficients = coefficients;
        result.correlations = correlations;
        result.cells.resize(cell_count);
        std::vector<double> conservation(cell_count, 0.0);

        parallel::for_each_index(cell_count, [&](std::size_t k) {
            const std::uint64_t cell_seed = config.seed + k;
            const double coefficient = coefficients[k / correlations.size()];
            const double c = correlations[k % correlations.size()];
            std::vector<double> means(reps), stds(reps), gfps(reps);
            for (std::size_t r = 0; r < reps; ++r) {
                const Graph fresh = config.shared_graphs
                                        ? Graph()
                                        : generate(config.shapes.params(family, derive_seed(cell_seed, family_index, r, 0)));
                const Graph& g = config.shared_graphs ? shared[r] : fresh;
                const auto sample =
                    run_sweep_replicate(config, family, g, coefficient, c, derive_seed(cell_seed, family_index, r, 1));
                means[r] = sample.mean_sv;
                stds[r] = sample.std_sv;
                gfps[r] = sample.gfp;
                conservation[k] = std::max(conservation[k], sample.conservation_error);
            }
            SweepCell& cell = result.cells[k];
            cell.coefficient = coefficient;
            cell.c = c;
            cell.replicates = reps;
            cell.mean_sv = stats::mean(means);
            cell.std_sv = stats::mean(stds);
            cell.gfp = stats::mean(gfps);
            cell.mean_sv_se = stats::standard_error(means);
            cell.std_sv_se = stats::standard_error(stds);
            cell.gfp_se = stats::standard_error(gfps);
        });
        for (double e : conservation) result.max_conservation_error = std::max(result.max_conservation_error, e);
        results.push_back(std::move(result));
    }
    return results;
}

// ---------------------------------------------------------------------------

namespace {

template <typename T>
void read_opt(const json& j, const char* key, T& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

void reject_unknown(const json& j, const std::set<std::string>& known, const char* what) {
    if (!j.is_object()) throw ParameterError(std::string(what) + ": config must be a JSON object");
    for (const auto& item : j.items()) {
        if (!known.count(item.key())) throw ParameterError(std::string(what) + ": unknown config key '" + item.key() + "'");
    }
}

std::uint64_t require_seed(const json& j, const char* what) {
    if (!j.contains("seed") || j.at("seed").is_null()) {
        throw ParameterError(std::string(what) + ": an explicit seed is required");
    }
    return j.at("seed").get<std::uint64_t>();
}

Grid grid_from_json(const json& j, Grid fallback) {
    read_opt(j, "min", fallback.min);
    read_opt(j, "max", fallback.max);
    read_opt(j, "steps", fallback.steps);
    return fallback;
}

json grid_to_json(const Grid& g) { return {{"min", g.min}, {"max", g.max}, {"steps", g.steps}}; }

void shapes_from_json(const json& j, FamilyShapes& s) {
    read_opt(j, "n", s.n);
    read_opt(j, "lattice_k", s.lattice_k);
    read_opt(j, "ba_m", s.ba_m);
    read_opt(j, "er_p", s.er_p);
}

void shapes_to_json(const FamilyShapes& s, json& j) {
    j["n"] = s.n;
    j["lattice_k"] = s.lattice_k;
    j["ba_m"] = s.ba_m;
    j["er_p"] = s.er_p;
}

template <typename Fn>
auto wrap_json_errors(const char* what, Fn&& fn) {
    try {
        return fn();
    } catch (const json::exception& e) {
        throw ParameterError(std::string(what) + ": " + e.what());
    }
}

} // namespace

DistributionConfig distribution_config_from_json(const json& j) {
    return wrap_json_errors("distribution config", [&] {
        reject_unknown(j,
                       {"n", "lattice_k", "ba_m", "er_p", "x_mean", "x_var", "linear_beta_s", "interaction_beta_s",
                        "interaction_beta_xs", "bin_width", "seed"},
                       "distribution config");
        DistributionConfig c;
        shapes_from_json(j, c.shapes);
        read_opt(j, "x_mean", c.x_mean);
        read_opt(j, "x_var", c.x_var);
        read_opt(j, "linear_beta_s", c.linear_beta_s);
        read_opt(j, "interaction_beta_s", c.interaction_beta_s);
        read_opt(j, "interaction_beta_xs", c.interaction_beta_xs);
        read_opt(j, "bin_width", c.bin_width);
        c.seed = require_seed(j, "distribution config");
        validate(c);
        return c;
    });
}

json to_json(const DistributionConfig& c) {
    json j;
    shapes_to_json(c.shapes, j);
    j["x_mean"] = c.x_mean;
    j["x_var"] = c.x_var;
    j["linear_beta_s"] = c.linear_beta_s;
    j["interaction_beta_s"] = c.interaction_beta_s;
    j["interaction_beta_xs"] = c.interaction_beta_xs;
    j["bin_width"] = c.bin_width;
    j["seed"] = c.seed;
    return j;
}

SweepConfig sweep_config_from_json(const json& j) {
    return wrap_json_errors("sweep config", [&] {
        reject_unknown(j,
                       {"families", "n", "lattice_k", "ba_m", "er_p", "coefficient_grid", "c_grid", "swept", "beta0",
                        "beta", "beta_s", "beta_xs", "noise_mean", "noise_var", "standardize_degree", "replicates",
                        "seed", "shared_graphs"},
                       "sweep config");
        SweepConfig c;
        if (j.contains("families")) {
            c.families.clear();
            for (const auto& tag : j.at("families")) c.families.push_back(parse_family(tag.get<std::string>()));
        }
        shapes_from_json(j, c.shapes);
        if (j.contains("coefficient_grid")) c.coefficient = grid_from_json(j.at("coefficient_grid"), c.coefficient);
        if (j.contains("c_grid")) c.correlation = grid_from_json(j.at("c_grid"), c.correlation);
        if (j.contains("swept")) {
            const auto swept = j.at("swept").get<std::string>();
            if (swept == "beta_xs") c.swept = SweptCoefficient::beta_xs;
            else if (swept == "beta_s") c.swept = SweptCoefficient::beta_s;
            else throw ParameterError("sweep config: swept must be 'beta_xs' or 'beta_s'");
        }
        read_opt(j, "beta0", c.beta0);
        read_opt(j, "beta", c.beta);
        read_opt(j, "beta_s", c.beta_s);
        read_opt(j, "beta_xs", c.beta_xs);
        read_opt(j, "noise_mean", c.noise_mean);
        read_opt(j, "noise_var", c.noise_var);
        read_opt(j, "standardize_degree", c.standardize_degree);
        read_opt(j, "replicates", c.replicates);
        read_opt(j, "shared_graphs", c.shared_graphs);
        c.seed = require_seed(j, "sweep config");
        validate(c);
        return c;
    });
}

json to_json(const SweepConfig& c) {
    json j;
    json families = json::array();
    for (GraphFamily f : c.families) families.push_back(family_tag(f));
    j["families"] = families;
    shapes_to_json(c.shapes, j);
    j["coefficient_grid"] = grid_to_json(c.coefficient);
    j["c_grid"] = grid_to_json(c.correlation);
    j["swept"] = c.swept == SweptCoefficient::beta_xs ? "beta_xs" : "beta_s";
    j["beta0"] = c.beta0;
    j["beta"] = c.beta;
    j["beta_s"] = c.beta_s;
    j["beta_xs"] = c.beta_xs;
    j["noise_mean"] = c.noise_mean;
    j["noise_var"] = c.noise_var;
    j["standardize_degree"] = c.standardize_degree;
    j["replicates"] = c.replicates;
    j["seed"] = c.seed;
    j["shared_graphs"] = c.shared_graphs;
    return j;
}

std::string format_sweep_csv(const SweepResult& result) {
    std::string out = "coefficient,c,mean_sv,std_sv,gfp\n";
    for (const auto& cell : result.cells) {
        out += text::format_double(cell.coefficient) + ',' + text::format_double(cell.c) + ',' +
               text::format_double(cell.mean_sv) + ',' + text::format_double(cell.std_sv) + ',' +
               text::format_double(cell.gfp) + '\n';
    }
    return out;
}

std::string format_distribution_csv(const DistributionRun& run) {
    std::string out = "node,degree,delta_y,sv\n";
    for (std::size_t i = 0; i < run.result.sv.size(); ++i) {
        out += std::to_string(i) + ',' + text::format_double(run.degree[i]) + ',' +
               text::format_double(run.result.delta_y[i]) + ',' + text::format_double(run.result.sv[i]) + '\n';
    }
    return out;
}

std::string format_histogram_csv(const stats::Histogram& h) {
    std::string out = "bin,count\n";
    for (std::size_t b = 0; b < h.counts.size(); ++b) {
        out += text::format_double(h.lower_edge(b)) + ',' + std::to_string(h.counts[b]) + '\n';
    }
    return out;
}

} // namespace socval
