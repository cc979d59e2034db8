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
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "socval/generators.hpp"
#include "socval/models.hpp"
#include "socval/social_value.hpp"
#include "socval/stats.hpp"

namespace socval {

/// Evenly spaced values from min to max inclusive.
struct Grid {
    double min = -1.0;
    double max = 1.0;
    std::size_t steps = 21;

    std::vector<double> values() const;
};

/// Shape parameters shared by the experiments; every family is built at the
/// same node count.
struct FamilyShapes {
    std::size_t n = 10000;
    std::size_t lattice_k = 4;
    std::size_t ba_m = 2;
    double er_p = 4e-4;

    GraphFamilyParams params(GraphFamily family, std::uint64_t seed) const;
};

// ---------------------------------------------------------------------------
// SV distributions per graph family

struct DistributionConfig {
    FamilyShapes shapes;
    double x_mean = 2.0;
    double x_var = 4.0;
    double linear_beta_s = 1.0;
    double interaction_beta_s = 0.5;
    double interaction_beta_xs = 0.5;
    double bin_width = 1.0;
    std::uint64_t seed = 0;
};

struct DistributionRun {
    GraphFamily family = GraphFamily::lattice;
    ModelFamily model = ModelFamily::linear;
    std::uint64_t graph_seed = 0;
    std::uint64_t covariate_seed = 0;
    std::vector<double> degree;
    SvResult result;
    stats::Histogram histogram;
};

struct DistributionReport {
    std::vector<DistributionRun> runs; ///< family-major, then linear, interaction
    double max_conservation_error = 0.0;

    const DistributionRun& find(GraphFamily family, ModelFamily model) const;
};

/// For lattice, BA and ER at matched mean degree: one graph and one N(mean,
/// var) covariate draw per family, SV under the linear and the interaction
/// model, and fixed-width histograms whose bins are shared across families
/// for each model.
DistributionReport run_distribution_experiment(const DistributionConfig& config);

// ---------------------------------------------------------------------------
// Coefficient x correlation heatmaps

enum class SweptCoefficient { beta_xs, beta_s };

struct SweepConfig {
    std::vector<GraphFamily> families{GraphFamily::barabasi_albert, GraphFamily::erdos_renyi};
    FamilyShapes shapes;
    Grid coefficient;
    Grid correlation;
    SweptCoefficient swept = SweptCoefficient::beta_xs;
    double beta0 = 0.0;
    double beta = 0.0;    ///< asocial main effect; cancels from every delta
    double beta_s = 0.0;  ///< held fixed when sweeping beta_xs
    double beta_xs = 0.5; ///< held fixed when sweeping beta_s
    double noise_mean = 2.0;
    double noise_var = 4.0;
    bool standardize_degree = false;
    std::size_t replicates = 5;
    std::uint64_t seed = 0;
    /// Reuse one graph per replicate index across all cells instead of a
    /// fresh graph per (cell, replicate).
    bool shared_graphs = false;
};

struct SweepCell {
    double coefficient = 0.0;
    double c = 0.0;
    double mean_sv = 0.0; ///< averaged over replicates
    double std_sv = 0.0;  ///< per-replicate population std, averaged
    double gfp = 0.0;
    std::size_t replicates = 0;
    double mean_sv_se = 0.0; ///< standard error across replicates
    double std_sv_se = 0.0;
    double gfp_se = 0.0;
};

struct SweepResult {
    GraphFamily family = GraphFamily::barabasi_albert;
    std::vector<double> coefficients;
    std::vector<double> correlations;
    std::vector<SweepCell> cells; ///< cell (i, j) at i * correlations.size() + j
    double max_conservation_error = 0.0;

    const SweepCell& at(std::size_t coefficient_index, std::size_t c_index) const {
        return cells[coefficient_index * correlations.size() + c_index];
    }
};

/// Seeds: cell k uses cell_seed = seed + k; replicate r of family f draws its
/// graph from derive_seed(cell_seed, f, r, 0) and its covariates from
/// derive_seed(cell_seed, f, r, 1). With shared graphs the graph seed is
/// derive_seed(seed, f, r, 0) for every cell. Cells run in parallel; results
/// do not depend on scheduling.
std::vector<SweepResult> run_heatmap_sweep(const SweepConfig& config);

/// One replicate of one sweep cell; exposed for tests.
struct CellSample {
    double mean_sv = 0.0;
    double std_sv = 0.0;
    double gfp = 0.0;
    double conservation_error = 0.0;
};
CellSample run_sweep_replicate(const SweepConfig& config, GraphFamily family, const Graph& graph, double coefficient,
                               double c, std::uint64_t covariate_seed);

// ---------------------------------------------------------------------------
// Config files and CSV output

void validate(const DistributionConfig& config);
void validate(const SweepConfig& config);

/// Missing keys take the defaults above, except `seed`, which is required.
DistributionConfig distribution_config_from_json(const nlohmann::json& j);
SweepConfig sweep_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const DistributionConfig& config);
nlohmann::json to_json(const SweepConfig& config);

std::string format_sweep_csv(const SweepResult& result);
std::string format_distribution_csv(const DistributionRun& run);
std::string format_histogram_csv(const stats::Histogram& histogram);

} // namespace socval
