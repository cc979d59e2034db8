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
#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "socval/error.hpp"
#include "socval/experiments.hpp"
#include "socval/parallel.hpp"
#include "socval/stats.hpp"
#include "socval/text.hpp"

using namespace socval;

namespace {

SweepConfig small_sweep(std::uint64_t seed) {
    SweepConfig c;
    c.shapes.n = 2000;
    c.shapes.er_p = 4.0 / 2000.0;
    c.coefficient = {-1.0, 1.0, 3};
    c.correlation = {-1.0, 1.0, 3};
    c.replicates = 3;
    c.seed = seed;
    return c;
}

double profile_range(const SweepResult& r, bool along_coefficient) {
    const std::size_t outer = along_coefficient ? r.coefficients.size() : r.correlations.size();
    const std::size_t inner = along_coefficient ? r.correlations.size() : r.coefficients.size();
    std::vector<double> profile(outer, 0.0);
    for (std::size_t a = 0; a < outer; ++a)
        for (std::size_t b = 0; b < inner; ++b)
            profile[a] += (along_coefficient ? r.at(a, b) : r.at(b, a)).std_sv / static_cast<double>(inner);
    const auto [lo, hi] = std::minmax_element(profile.begin(), profile.end());
    return *hi - *lo;
}

} // namespace

TEST_CASE("grid values include both ends exactly") {
    const auto v = Grid{-1.0, 1.0, 21}.values();
    REQUIRE(v.size() == 21);
    CHECK(v.front() == -1.0);
    CHECK(v.back() == 1.0);
    CHECK(v[10] == 0.0);
    CHECK(v[1] == doctest::Approx(-0.9));
    CHECK(Grid{0.5, 0.5, 1}.values() == std::vector<double>{0.5});
}

TEST_CASE("sweep config validation") {
    SweepConfig c = small_sweep(1);
    c.replicates = 0;
    CHECK_THROWS_AS(validate(c), ParameterError);
    c = small_sweep(1);
    c.coefficient.steps = 0;
    CHECK_THROWS_AS(validate(c), ParameterError);
    c = small_sweep(1);
    c.correlation.max = std::nan("");
    CHECK_THROWS_AS(validate(c), ParameterError);
    c = small_sweep(1);
    c.families.clear();
    CHECK_THROWS_AS(validate(c), ParameterError);
}

TEST_CASE("sweep config JSON") {
    CHECK_THROWS_AS(sweep_config_from_json(nlohmann::json::object()), ParameterError);
    CHECK_THROWS_AS(sweep_config_from_json({{"seed", 1}, {"replicats", 3}}), ParameterError);
    const SweepConfig parsed = sweep_config_from_json({{"seed", 9},
                                                       {"replicates", 2},
                                                       {"swept", "beta_s"},
                                                       {"families", {"er"}},
                                                       {"c_grid", {{"min", 0.0}, {"max", 1.0}, {"steps", 5}}}});
    CHECK(parsed.seed == 9);
    CHECK(parsed.replicates == 2);
    CHECK(parsed.swept == SweptCoefficient::beta_s);
    CHECK(parsed.families == std::vector<GraphFamily>{GraphFamily::erdos_renyi});
    CHECK(parsed.correlation.steps == 5);
    CHECK(parsed.coefficient.steps == 21);
    CHECK(to_json(sweep_config_from_json(to_json(parsed))) == to_json(parsed));
}

TEST_CASE("distribution config JSON") {
    CHECK_THROWS_AS(distribution_config_from_json(nlohmann::json::object()), ParameterError);
    const auto c = distribution_config_from_json({{"seed", 4}, {"n", 500}});
    CHECK(c.shapes.n == 500);
    CHECK(c.x_mean == 2.0);
    CHECK(to_json(distribution_config_from_json(to_json(c))) == to_json(c));
}

TEST_CASE("sweep output shape and determinism") {
    const SweepConfig c = small_sweep(5);
    const auto a = run_heatmap_sweep(c);
    REQUIRE(a.size() == 2);
    CHECK(a[0].family == GraphFamily::barabasi_albert);
    CHECK(a[1].family == GraphFamily::erdos_renyi);
    for (const auto& r : a) {
        CHECK(r.cells.size() == 9);
        const std::string csv = format_sweep_csv(r);
        CHECK(csv.starts_with("coefficient,c,mean_sv,std_sv,gfp\n"));
        CHECK(std::count(csv.begin(), csv.end(), '\n') == 10);
        CHECK(r.max_conservation_error < 1e-10);
        for (const auto& cell : r.cells) {
            CHECK(cell.std_sv >= 0.0);
            CHECK(cell.replicates == 3);
        }
    }
    const auto b = run_heatmap_sweep(c);
    for (std::size_t f = 0; f < 2; ++f) CHECK(format_sweep_csv(a[f]) == format_sweep_csv(b[f]));
}

TEST_CASE("sweep results do not depend on the thread count") {
    const SweepConfig c = small_sweep(6);
    parallel::set_max_threads(1);
    const auto one = run_heatmap_sweep(c);
    parallel::set_max_threads(3);
    const auto three = run_heatmap_sweep(c);
    parallel::set_max_threads(0);
    for (std::size_t f = 0; f < one.size(); ++f) CHECK(format_sweep_csv(one[f]) == format_sweep_csv(three[f]));
}

TEST_CASE("sweep cell seeds follow base seed plus cell index") {
    // Cell k of a sweep seeded s uses cell seed s + k, so cell 1 of seed 10
    // equals cell 0 of seed 11 when both cells share (coefficient, c).
    SweepConfig a = small_sweep(10);
    a.coefficient = {0.5, 0.5, 1};
    a.correlation = {0.25, 0.25, 2};
    SweepConfig b = a;
    b.seed = 11;
    const auto ra = run_heatmap_sweep(a);
    const auto rb = run_heatmap_sweep(b);
    CHECK(ra[0].at(0, 1).mean_sv == rb[0].at(0, 0).mean_sv);
    CHECK(ra[0].at(0, 0).mean_sv != rb[0].at(0, 0).mean_sv);
}

TEST_CASE("BA corner ordering in mean SV and GFP") {
    SweepConfig c = small_sweep(21);
    c.families = {GraphFamily::barabasi_albert};
    const auto r = run_heatmap_sweep(c)[0];
    // indices: 0 -> -1, 2 -> +1
    CHECK(r.at(2, 2).mean_sv > r.at(2, 0).mean_sv);
    CHECK(r.at(0, 0).mean_sv > r.at(0, 2).mean_sv);
    for (std::size_t i : {0u, 2u})
        for (std::size_t j : {0u, 2u}) CHECK((r.at(i, j).gfp > 0.0) == (r.at(i, j).mean_sv > 0.0));
}

TEST_CASE("symmetric corners agree without a noise offset") {
    SweepConfig c = small_sweep(31);
    c.families = {GraphFamily::barabasi_albert};
    c.noise_mean = 0.0;
    c.replicates = 8;
    const auto r = run_heatmap_sweep(c)[0];
    const auto& pp = r.at(2, 2);
    const auto& mm = r.at(0, 0);
    const double se = std::hypot(pp.mean_sv_se, mm.mean_sv_se);
    CHECK(std::abs(pp.mean_sv - mm.mean_sv) < 4.0 * se);
}

TEST_CASE("ER std SV is flatter along c than BA relative to the coefficient axis") {
    SweepConfig c = small_sweep(41);
    c.shapes.n = 5000;
    c.shapes.er_p = 4.0 / 5000.0;
    c.coefficient = {-1.0, 1.0, 5};
    c.correlation = {-1.0, 1.0, 5};
    const auto r = run_heatmap_sweep(c);
    const double ba_ratio = profile_range(r[0], false) / profile_range(r[0], true);
    const double er_ratio = profile_range(r[1], false) / profile_range(r[1], true);
    CHECK(er_ratio < ba_ratio);
}

TEST_CASE("replicate standard error shrinks as one over root replicates") {
    SweepConfig c = small_sweep(0);
    c.shapes.n = 1000;
    c.shapes.er_p = 4.0 / 1000.0;
    c.families = {GraphFamily::erdos_renyi};
    c.coefficient = {0.5, 0.5, 1};
    c.correlation = {0.5, 0.5, 1};
    std::vector<double> spread;
    for (std::size_t reps : {1u, 4u, 16u}) {
        c.replicates = reps;
        std::vector<double> means;
        for (std::uint64_t k = 0; k < 200; ++k) {
            c.seed = 1000 * reps + 7919 * k;
            means.push_back(run_heatmap_sweep(c)[0].cells[0].mean_sv);
        }
        spread.push_back(std::sqrt(stats::sample_variance(means)));
    }
    // sd of a 200-sample standard deviation is about 5%, so the ratios of two
    // consecutive steps sit within roughly 2 +- 0.3
    CHECK(spread[0] / spread[1] == doctest::Approx(2.0).epsilon(0.2));
    CHECK(spread[1] / spread[2] == doctest::Approx(2.0).epsilon(0.2));
}

TEST_CASE("shared graphs reuse one graph per replicate") {
    SweepConfig c = small_sweep(3);
    c.shared_graphs = true;
    c.families = {GraphFamily::erdos_renyi};
    c.replicates = 1;
    c.coefficient = {0.0, 0.0, 1};
    c.correlation = {-1.0, 1.0, 3};
    // with a zero coefficient and beta_s = 0 every delta vanishes
    for (const auto& cell : run_heatmap_sweep(c)[0].cells) CHECK(cell.mean_sv == 0.0);
}

TEST_CASE("distribution experiment") {
    DistributionConfig c;
    c.shapes.n = 3000;
    c.shapes.er_p = 4.0 / 3000.0;
    c.seed = 12;
    const auto report = run_distribution_experiment(c);
    REQUIRE(report.runs.size() == 6);
    CHECK(report.max_conservation_error < 1e-10);
    for (const auto& run : report.runs) {
        std::size_t total = 0;
        for (auto count : run.histogram.counts) total += count;
        CHECK(total == 3000);
        CHECK(run.result.sv.size() == 3000);
        const auto csv = format_distribution_csv(run);
        CHECK(csv.starts_with("node,degree,delta_y,sv\n"));
        CHECK(format_histogram_csv(run.histogram).starts_with("bin,count\n"));
    }
    for (GraphFamily f : {GraphFamily::lattice, GraphFamily::barabasi_albert, GraphFamily::erdos_renyi}) {
        const auto& lin = report.find(f, ModelFamily::linear);
        auto sv = lin.result.sv;
        auto deg = lin.degree;
        std::sort(sv.begin(), sv.end());
        std::sort(deg.begin(), deg.end());
        CHECK(sv == deg);
        // bins are shared across families for a model
        CHECK(lin.histogram.origin == report.find(GraphFamily::lattice, ModelFamily::linear).histogram.origin);
        CHECK(report.find(f, ModelFamily::interaction).histogram.counts.size() ==
              report.find(GraphFamily::lattice, ModelFamily::interaction).histogram.counts.size());
    }
    CHECK(report.find(GraphFamily::lattice, ModelFamily::linear).result.mean_sv == 4.0);
    const double p_ba = stats::quantile(report.find(GraphFamily::barabasi_albert, ModelFamily::interaction).result.sv, 0.999);
    const double p_er = stats::quantile(report.find(GraphFamily::erdos_renyi, ModelFamily::interaction).result.sv, 0.999);
    const double p_lat = stats::quantile(report.find(GraphFamily::lattice, ModelFamily::interaction).result.sv, 0.999);
    CHECK(p_ba > p_er);
    CHECK(p_er > p_lat);
}

TEST_CASE("stats helpers") {
    const std::vector<double> v{1, 2, 3, 4};
    CHECK(stats::mean(v) == 2.5);
    CHECK(stats::population_variance(v) == 1.25);
    CHECK(stats::sample_variance(v) == doctest::Approx(5.0 / 3.0));
    CHECK(stats::quantile(v, 0.5) == 2.5);
    CHECK(stats::quantile(v, 1.0) == 4.0);
    CHECK(stats::quantile(v, 0.0) == 1.0);
    CHECK(stats::pearson(v, std::vector<double>{2, 4, 6, 8}) == doctest::Approx(1.0));
    const auto h = stats::histogram(v, 0.0, 2.0, 3);
    CHECK(h.counts == std::vector<std::size_t>{1, 2, 1});
    CHECK_THROWS(stats::histogram(v, 2.0, 1.0, 2));
}

TEST_CASE("number formatting round trips") {
    for (double x : {0.1, -2.5e-300, 1.0 / 3.0, 6.0, 1e21}) CHECK(text::parse_double(text::format_double(x), "x") == x);
    CHECK(text::format_double(-0.0) == "0");
    CHECK(text::format_double(4.0) == "4");
    CHECK_THROWS_AS(text::parse_double("1.5x", "x"), FormatError);
    CHECK_THROWS_AS(text::parse_uint("-1", "x"), FormatError);
}
