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
// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"
#include "socval/covariates.hpp"
#include "socval/experiments.hpp"
#include "socval/generators.hpp"
#include "socval/graph_io.hpp"
#include "socval/hash.hpp"
#include "socval/rng.hpp"
#include "socval/social_value.hpp"
#include "socval/stats.hpp"
#include "socval/text.hpp"
#include "support.hpp"

using namespace socval;
using namespace socval::testing;
using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [violated: " << what << "]";
        }
    }
};

constexpr std::uint64_t kSeed = 20260101;
constexpr std::size_t kN = 10000;

GraphFamilyParams default_params(GraphFamily f, std::uint64_t seed) {
    FamilyShapes shapes;
    return shapes.params(f, seed);
}

const GraphFamily kFamilies[] = {GraphFamily::lattice, GraphFamily::barabasi_albert, GraphFamily::erdos_renyi};

std::string fmt(double v) { return text::format_double(v); }

// Standard error of mean SV. Mean SV equals mean delta by conservation, and
// deltas are independent across nodes given the graph.
double sv_standard_error(const SvResult& r) { return stats::standard_error(r.delta_y); }

double g_max_conservation = 0.0;
void note_conservation(double e) { g_max_conservation = std::max(g_max_conservation, e); }

// ---------------------------------------------------------------------------

Outcome ac1_linear_means() {
    Outcome o;
    for (GraphFamily f : kFamilies) {
        const auto start = Clock::now();
        const auto params = default_params(f, derive_seed(kSeed, 1, static_cast<std::uint64_t>(f)));
        const Graph g = generate(params);
        const auto table =
            CovariateTable::bind(g, sample_independent(kN, 1, 2.0, 4.0, derive_seed(kSeed, 2, static_cast<std::uint64_t>(f))));
        const auto r = compute_social_value(g, table, LinearModel{0.0, {1.0}, 1.0});
        const double elapsed = seconds_since(start);
        note_conservation(r.conservation_error);
        const double se = sv_standard_error(r);
        o.detail << ' ' << family_tag(f) << ": mean=" << fmt(r.mean_sv) << " var=" << fmt(r.var_sv) << " se=" << fmt(se)
                 << " t=" << fmt(std::round(elapsed * 1000.0) / 1000.0) << "s;";
        o.require(elapsed < 5.0, family_tag(f) + " runtime < 5 s");
        switch (f) {
        case GraphFamily::lattice:
            o.require(r.mean_sv == 4.0 && r.var_sv == 0.0, "lattice mean exactly 4, variance 0");
            break;
        case GraphFamily::erdos_renyi:
            o.require(std::abs(r.mean_sv - 4.0) <= 3.0 * se, "ER within 3 SE of 4");
            break;
        case GraphFamily::barabasi_albert:
            o.require(std::abs(r.mean_sv - 4.0) / 4.0 <= 0.05, "BA within 5% of 4");
            break;
        }
    }
    return o;
}

Outcome ac2_linear_identity() {
    Outcome o;
    for (double beta_s : {1.0, 1.5}) {
        for (GraphFamily f : kFamilies) {
            const Graph g = generate(default_params(f, derive_seed(kSeed, 3, static_cast<std::uint64_t>(f))));
            const auto table = CovariateTable::bind(g, sample_independent(kN, 1, 2.0, 4.0, derive_seed(kSeed, 4)));
            const LinearModel m{0.0, {1.0}, beta_s};
            auto expected = std::vector<double>(g.weighted_degrees().begin(), g.weighted_degrees().end());
            for (auto& v : expected) v *= beta_s;
            std::sort(expected.begin(), expected.end());

            auto closed = compute_social_value(g, table, m).sv;
            auto distributed = compute_sv(g, delta_y_closed(m, table));
            std::sort(closed.begin(), closed.end());
            std::sort(distributed.begin(), distributed.end());
            const bool ok = closed == expected && distributed == expected;
            o.require(ok, family_tag(f) + " beta_s=" + fmt(beta_s) + " multiset identity");
        }
    }
    o.detail << " exact multiset equality on lattice, ba, er for beta_s in {1, 1.5} via the closed form and the "
                "neighbor sum;";
    return o;
}

Outcome ac3_interaction_means() {
    Outcome o;
    const InteractionModel m{0.0, {1.0}, 0.5, Matrix(1, 1), {0.5}};
    for (GraphFamily f : kFamilies) {
        const Graph g = generate(default_params(f, derive_seed(kSeed, 5, static_cast<std::uint64_t>(f))));
        const auto table =
            CovariateTable::bind(g, sample_independent(kN, 1, 2.0, 4.0, derive_seed(kSeed, 6, static_cast<std::uint64_t>(f))));
        const auto r = compute_social_value(g, table, m);
        note_conservation(r.conservation_error);
        const double se = sv_standard_error(r);
        o.detail << ' ' << family_tag(f) << ": mean=" << fmt(r.mean_sv) << " se=" << fmt(se) << ';';
        o.require(std::abs(r.mean_sv - 6.0) <= 3.0 * se, family_tag(f) + " within 3 SE of 6");
    }
    return o;
}

// Random instance generators for the property checks.

Graph random_family_graph(Rng& rng, GraphFamily f) {
    const std::size_t n = 200 + rng.below(1800);
    switch (f) {
    case GraphFamily::lattice: return generate_lattice(n, 2 * (1 + rng.below(3)));
    case GraphFamily::barabasi_albert: return generate_ba(n, 1 + rng.below(3), rng.next());
    case GraphFamily::erdos_renyi: return generate_er(n, (2.0 + 4.0 * rng.uniform()) / static_cast<double>(n), rng.next());
    }
    return {};
}

Model random_model(Rng& rng, ModelFamily fam, std::size_t d) {
    auto coef = [&] { return rng.normal(0.0, 2.0); };
    switch (fam) {
    case ModelFamily::linear: {
        LinearModel m{coef(), {}, coef()};
        for (std::size_t r = 0; r < d; ++r) m.beta.push_back(coef());
        return m;
    }
    case ModelFamily::interaction: {
        InteractionModel m{coef(), {}, coef(), Matrix(d, d), {}};
        for (std::size_t r = 0; r < d; ++r) {
            m.beta.push_back(coef());
            m.beta_xs.push_back(coef());
            for (std::size_t q = r; q < d; ++q) m.beta_xx(r, q) = m.beta_xx(q, r) = coef();
        }
        return m;
    }
    case ModelFamily::ensemble: break;
    }
    const std::size_t size = 1 + rng.below(200);
    std::vector<EnsembleMember> members;
    for (std::size_t k = 0; k < size; ++k) {
        const bool social = rng.below(3) == 0;
        Stump h{social ? Stump::social : static_cast<std::size_t>(rng.below(d)),
                social ? 1.0 + static_cast<double>(rng.below(8)) + 0.5 : rng.normal(0.0, 2.0), rng.normal(0.0, 1.0),
                rng.normal(0.0, 1.0)};
        if (social && h.left == h.right) h.right += 1.0;
        members.push_back({rng.normal(0.0, 1.0), h, social});
    }
    return EnsembleModel(d, coef(), std::move(members));
}

Outcome ac4_path_equivalence() {
    Outcome o;
    Rng rng(derive_seed(kSeed, 7));
    double worst = 0.0;
    std::size_t instances = 0;
    for (GraphFamily f : kFamilies) {
        for (ModelFamily mf : {ModelFamily::linear, ModelFamily::interaction, ModelFamily::ensemble}) {
            double worst_here = 0.0;
            for (int trial = 0; trial < 50; ++trial, ++instances) {
                const Graph g = random_family_graph(rng, f);
                const std::size_t d = 1 + rng.below(3);
                const auto table = CovariateTable::bind(g, sample_independent(g.node_count(), d, 2.0, 4.0, rng.next()));
                const Model m = random_model(rng, mf, d);
                const auto dy = delta_y(m, table);
                const auto generic = compute_sv(g, dy);
                const auto matrix = compute_sv_matrix(g, dy);
                std::vector<double> closed;
                if (mf == ModelFamily::linear) closed = sv_closed_linear(g, std::get<LinearModel>(m).beta_s);
                else if (mf == ModelFamily::interaction)
                    closed = sv_closed_interaction(g, table, std::get<InteractionModel>(m));
                else closed = compute_sv_matrix(g, delta_y_ensemble_reduced(std::get<EnsembleModel>(m), table));
                worst_here = std::max({worst_here, max_rel_dev(generic, matrix), max_rel_dev(generic, closed),
                                       max_rel_dev(matrix, closed)});
                note_conservation(conservation_error(dy, generic));
            }
            o.detail << ' ' << family_tag(f) << '/' << family_tag(mf) << '=' << fmt(worst_here) << ';';
            worst = std::max(worst, worst_here);
        }
    }
    o.detail << " instances=" << instances << " max_rel_dev=" << fmt(worst);
    o.require(worst < 1e-12, "max relative deviation < 1e-12");
    return o;
}

Outcome ac5_ensemble_reduction() {
    Outcome o;
    Rng rng(derive_seed(kSeed, 8));
    double worst = 0.0;
    bool counts_ok = true;
    std::size_t trials = 30;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const Graph g = random_family_graph(rng, kFamilies[trial % 3]);
        const std::size_t d = 1 + rng.below(3);
        const auto table = CovariateTable::bind(g, sample_independent(g.node_count(), d, 2.0, 4.0, rng.next()));
        std::vector<EnsembleMember> members;
        for (std::size_t k = 0; k < 200; ++k) {
            const bool social = rng.below(4) == 0;
            Stump h{social ? Stump::social : static_cast<std::size_t>(rng.below(d)),
                    social ? 0.5 + 10.0 * rng.uniform() : rng.normal(2.0, 2.0), rng.normal(0.0, 1.0),
                    rng.normal(0.0, 1.0) + 0.1};
            members.push_back({rng.normal(0.0, 1.0), h, social});
        }
        const EnsembleModel em(d, rng.normal(0.0, 1.0), std::move(members));
        EvalCounter full, reduced;
        const auto a = delta_y(em, table, &full);
        const auto b = delta_y_ensemble_reduced(em, table, &reduced);
        worst = std::max(worst, max_rel_dev(a, b));
        const std::uint64_t n = g.node_count();
        const std::uint64_t social = em.social_member_count();
        counts_ok = counts_ok && reduced.asocial_calls == 0 && reduced.social_calls == 2 * social * n &&
                    full.asocial_calls == 2 * (200 - social) * n;
    }
    o.detail << " trials=" << trials << " stumps=200 max_rel_dev=" << fmt(worst)
             << " S-free stump calls in reduced path=" << (counts_ok ? "0" : "nonzero");
    o.require(worst < 1e-12, "reduced delta within 1e-12");
    o.require(counts_ok, "call counts: S-free stumps never evaluated");
    return o;
}

Outcome ac6_conservation(double distribution_max, double sweep_max) {
    Outcome o;
    Rng rng(derive_seed(kSeed, 9));
    double weighted_max = 0.0;
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = random_graph(rng, 300, 0.02, true);
        const auto table = CovariateTable::bind(g, sample_independent(300, 2, 2.0, 4.0, rng.next()));
        for (ModelFamily mf : {ModelFamily::linear, ModelFamily::interaction, ModelFamily::ensemble}) {
            const Model m = random_model(rng, mf, 2);
            for (bool generic : {false, true})
                weighted_max = std::max(weighted_max, compute_social_value(g, table, m, generic).conservation_error);
        }
    }
    const double worst = std::max({weighted_max, distribution_max, sweep_max, g_max_conservation});
    o.detail << " weighted=" << fmt(weighted_max) << " distribution=" << fmt(distribution_max)
             << " sweep=" << fmt(sweep_max) << " other=" << fmt(g_max_conservation);
    o.require(worst < 1e-10, "relative conservation error < 1e-10");
    return o;
}

double axis_range(const SweepResult& r, bool along_coefficient) {
    const std::size_t outer = along_coefficient ? r.coefficients.size() : r.correlations.size();
    const std::size_t inner = along_coefficient ? r.correlations.size() : r.coefficients.size();
    std::vector<double> profile(outer, 0.0);
    for (std::size_t a = 0; a < outer; ++a)
        for (std::size_t b = 0; b < inner; ++b)
            profile[a] += (along_coefficient ? r.at(a, b) : r.at(b, a)).std_sv / static_cast<double>(inner);
    const auto [lo, hi] = std::minmax_element(profile.begin(), profile.end());
    return *hi - *lo;
}

Outcome ac7_heatmap(const std::vector<SweepResult>& results, double elapsed) {
    Outcome o;
    o.detail << " sweep time=" << fmt(std::round(elapsed * 10.0) / 10.0) << "s;";
    o.require(elapsed < 600.0, "full sweep under 10 minutes");
    for (const auto& r : results) {
        const std::size_t hi_i = r.coefficients.size() - 1, hi_j = r.correlations.size() - 1;
        if (r.family == GraphFamily::barabasi_albert) {
            const SweepCell* same[] = {&r.at(hi_i, hi_j), &r.at(0, 0)};
            const SweepCell* mixed[] = {&r.at(hi_i, 0), &r.at(0, hi_j)};
            int margin_violations = 0;
            double min_margin_mean = INFINITY, min_margin_gfp = INFINITY;
            for (const auto* a : same) {
                for (const auto* b : mixed) {
                    const double dm = (a->mean_sv - b->mean_sv) / std::hypot(a->mean_sv_se, b->mean_sv_se);
                    const double dg = (a->gfp - b->gfp) / std::hypot(a->gfp_se, b->gfp_se);
                    min_margin_mean = std::min(min_margin_mean, dm);
                    min_margin_gfp = std::min(min_margin_gfp, dg);
                    margin_violations += (dm <= 2.0) + (dg <= 2.0);
                }
            }
            o.detail << " ba corners mean(++,--,+-,-+)=" << fmt(same[0]->mean_sv) << ',' << fmt(same[1]->mean_sv) << ','
                     << fmt(mixed[0]->mean_sv) << ',' << fmt(mixed[1]->mean_sv)
                     << " min margin in SE: mean=" << fmt(min_margin_mean) << " gfp=" << fmt(min_margin_gfp) << ';';
            o.require(margin_violations == 0, "BA same-sign corners exceed mixed-sign corners by > 2 SE");
        } else if (r.family == GraphFamily::erdos_renyi) {
            const double coef_axis = axis_range(r, true);
            const double c_axis = axis_range(r, false);
            o.detail << " er std_sv profile range: coefficient axis=" << fmt(coef_axis) << " c axis=" << fmt(c_axis)
                     << " ratio=" << fmt(coef_axis / c_axis) << ';';
            o.require(coef_axis >= 5.0 * c_axis, "ER coefficient-axis std variation >= 5x c-axis variation");
        }
    }
    return o;
}

Outcome ac8_tail_ordering(const DistributionReport& report) {
    Outcome o;
    const double ba = stats::quantile(report.find(GraphFamily::barabasi_albert, ModelFamily::interaction).result.sv, 0.999);
    const double er = stats::quantile(report.find(GraphFamily::erdos_renyi, ModelFamily::interaction).result.sv, 0.999);
    const double lat = stats::quantile(report.find(GraphFamily::lattice, ModelFamily::interaction).result.sv, 0.999);
    o.detail << " p99.9: ba=" << fmt(ba) << " er=" << fmt(er) << " lattice=" << fmt(lat);
    o.require(ba > er && er > lat, "ba > er > lattice");
    return o;
}

// Runs a command, then re-runs it from the manifest it wrote and compares
// every output file against the hashes recorded the first time.
struct CliCheck {
    Outcome& o;
    int run(const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        if (code != 0) o.detail << " [" << args[0] << " failed: " << err.str() << "]";
        return code;
    }
    void replay(const std::string& command, const std::filesystem::path& manifest) {
        const json first = json::parse(text::read_file(manifest));
        const std::filesystem::path base = manifest.parent_path();
        if (run({command, "--config", manifest.string()}) != 0) {
            o.require(false, command + " re-run succeeds");
            return;
        }
        bool same = !first.at("outputs").empty();
        for (const auto& entry : first.at("outputs"))
            same = same && sha256_file(base / entry.at("path").get<std::string>()) == entry.at("sha256");
        const json second = json::parse(text::read_file(manifest));
        same = same && second.at("outputs") == first.at("outputs");
        o.detail << ' ' << command << '=' << (same ? "identical" : "DIFFERENT") << ';';
        o.require(same, command + " outputs byte-identical on re-run");
    }
};

Outcome ac9_determinism() {
    Outcome o;
    TempDir dir;
    CliCheck check{o};
    const auto p = [&](const std::string& name) { return dir / name; };

    check.run({"generate", "--family", "ba", "--n", "5000", "--m", "2", "--out", p("g.tsv")});
    check.replay("generate", p("g.tsv.manifest.json"));

    const Graph g = read_edge_list(p("g.tsv"));
    const Matrix x = sample_independent(g.node_count(), 1, 2.0, 4.0, 5);
    Rng rng(6);
    std::vector<double> y(g.node_count());
    for (NodeId i = 0; i < g.node_count(); ++i)
        y[i] = 1.0 + 0.7 * x(i, 0) + 0.5 * g.weighted_degree(i) + 0.5 * x(i, 0) * g.weighted_degree(i) + rng.normal(0.0, 0.1);
    text::write_file(p("x.csv"), format_covariates(x));
    text::write_file(p("y.csv"), format_targets(y));

    check.run({"fit", "--graph", p("g.tsv"), "--covariates", p("x.csv"), "--targets", p("y.csv"), "--family",
               "interaction", "--out", p("model.json")});
    check.replay("fit", p("model.json.manifest.json"));

    check.run({"sv", "--graph", p("g.tsv"), "--covariates", p("x.csv"), "--model", p("model.json"), "--out", p("sv.csv")});
    check.replay("sv", p("sv.csv.manifest.json"));

    check.run({"gfp", "--graph", p("g.tsv"), "--sv", p("sv.csv"), "--out", p("gfp.json")});
    check.replay("gfp", p("gfp.json.manifest.json"));

    check.run({"theory", "--family", "er", "--beta-s", "0.5", "--beta-xs", "0.5", "--mu-x", "2", "--var-x", "4", "--out",
               p("theory.json")});
    check.replay("theory", p("theory.json.manifest.json"));

    text::write_file(p("sweep.json"), R"({"seed": 17, "n": 2000, "er_p": 0.002, "replicates": 2,
        "coefficient_grid": {"min": -1, "max": 1, "steps": 5}, "c_grid": {"min": -1, "max": 1, "steps": 5}})");
    check.run({"sweep", "--config", p("sweep.json"), "--out", p("sweep")});
    check.replay("sweep", p("sweep/manifest.json"));

    check.run({"distribution", "--seed", "23", "--out", p("dist")});
    check.replay("distribution", p("dist/manifest.json"));
    return o;
}

} // namespace

int main() {
    struct Line {
        std::string id, title;
        Outcome outcome;
    };
    std::vector<Line> lines;
    auto report = [&](const std::string& id, const std::string& title, Outcome o) {
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << id << ' ' << title << ':' << o.detail.str() << std::endl;
        lines.push_back({id, title, std::move(o)});
    };

    report("AC1", "linear means per family", ac1_linear_means());
    report("AC2", "linear SV multiset equals scaled degrees", ac2_linear_identity());
    report("AC3", "interaction mean 6 per family", ac3_interaction_means());
    report("AC4", "closed-form, neighbor-sum and matrix paths agree", ac4_path_equivalence());
    report("AC5", "ensemble reduction", ac5_ensemble_reduction());

    DistributionConfig dist;
    dist.seed = kSeed;
    const DistributionReport distribution = run_distribution_experiment(dist);

    SweepConfig sweep;
    sweep.seed = kSeed;
    const auto start = Clock::now();
    const auto sweep_results = run_heatmap_sweep(sweep);
    const double sweep_seconds = seconds_since(start);
    double sweep_conservation = 0.0;
    for (const auto& r : sweep_results) sweep_conservation = std::max(sweep_conservation, r.max_conservation_error);

    report("AC6", "conservation", ac6_conservation(distribution.max_conservation_error, sweep_conservation));
    report("AC7", "heatmap sign structure (21x21, 5 replicates)", ac7_heatmap(sweep_results, sweep_seconds));
    report("AC8", "interaction tail ordering", ac8_tail_ordering(distribution));
    report("AC9", "manifest re-runs are byte-identical", ac9_determinism());

    const auto failed = std::count_if(lines.begin(), lines.end(), [](const Line& l) { return !l.outcome.pass; });
    std::cout << (lines.size() - static_cast<std::size_t>(failed)) << '/' << lines.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
