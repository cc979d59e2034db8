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
#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <optional>
#include <random>

#include "CLI11.hpp"
#include "json.hpp"
#include "socval/covariates.hpp"
#include "socval/error.hpp"
#include "socval/experiments.hpp"
#include "socval/generators.hpp"
#include "socval/graph_io.hpp"
#include "socval/hash.hpp"
#include "socval/model_io.hpp"
#include "socval/ols.hpp"
#include "socval/parallel.hpp"
#include "socval/rng.hpp"
#include "socval/social_value.hpp"
#include "socval/stats.hpp"
#include "socval/text.hpp"
#include "socval/theory.hpp"

namespace socval::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string utc_now() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Run manifest: command, resolved config, seeds and a content hash for every
// output. Feeding the file back through --config reproduces the outputs.
struct Manifest {
    std::string command;
    json config = json::object();
    json seeds = json::object();
    std::vector<fs::path> outputs;
    std::string started_at = utc_now();

    void write(const fs::path& path) const {
        json j;
        j["command"] = command;
        j["library_version"] = SOCVAL_VERSION;
        j["rng"] = std::string(Rng::name);
        j["config"] = config;
        j["seeds"] = seeds;
        j["timestamps"] = {{"started_at", started_at}, {"finished_at", utc_now()}};
        json files = json::array();
        for (const auto& out : outputs) {
            const std::string contents = text::read_file(out);
            files.push_back({{"path", out.lexically_proximate(path.parent_path().empty() ? fs::path(".") : path.parent_path())
                                          .generic_string()},
                             {"sha256", sha256_hex(contents)},
                             {"bytes", contents.size()}});
        }
        j["outputs"] = files;
        text::write_file(path, j.dump(2) + "\n");
    }
};

// A config file is either a flat object of option values or a manifest whose
// "config" member holds them.
json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    json j;
    try {
        j = json::parse(text::read_file(path));
    } catch (const json::exception& e) {
        throw FormatError("config '" + path + "': " + e.what());
    }
    if (j.is_object() && j.contains("command") && j.contains("config")) return j.at("config");
    if (!j.is_object()) throw FormatError("config '" + path + "' must be a JSON object");
    return j;
}

// Fills `value` from the config when the flag was not given on the command
// line. Flags always win.
template <typename T>
bool fill(const json& cfg, const CLI::Option* opt, const char* key, T& value) {
    if (opt->count() > 0) return true;
    if (!cfg.contains(key) || cfg.at(key).is_null()) return false;
    try {
        value = cfg.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParameterError(std::string("config key '") + key + "': " + e.what());
    }
    return true;
}

void require(bool present, const std::string& name) {
    if (!present) throw ParameterError("missing required option --" + name);
}

fs::path sidecar_path(const fs::path& out) {
    fs::path p = out;
    if (p.extension() == ".csv") return p.replace_extension(".json");
    return fs::path(out.string() + ".json");
}

fs::path manifest_path(const fs::path& out) { return fs::path(out.string() + ".manifest.json"); }

json input_record(const fs::path& path) { return {{"path", path.generic_string()}, {"sha256", sha256_file(path)}}; }

std::vector<std::string> graph_comments(const std::string& contents) {
    std::vector<std::string> out;
    for (auto line : text::lines(contents)) {
        if (!line.starts_with('#')) break;
        line.remove_prefix(1);
        while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
        out.emplace_back(line);
    }
    return out;
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

// ---------------------------------------------------------------------------

struct GenerateCmd {
    CLI::App* app = nullptr;
    std::string config_path, family, out;
    std::size_t n = 10000, k = 4, m = 2;
    double p = 4e-4;
    std::uint64_t seed = 0;
    CLI::Option *o_family{}, *o_n{}, *o_k{}, *o_m{}, *o_p{}, *o_seed{}, *o_out{};

    void attach(CLI::App& root) {
        app = root.add_subcommand("generate", "Generate a lattice, Barabasi-Albert or Erdos-Renyi graph");
        app->add_option("--config", config_path, "JSON config or manifest");
        o_family = app->add_option("--family", family, "lattice | ba | er");
        o_n = app->add_option("--n", n, "node count");
        o_k = app->add_option("--k", k, "lattice neighbor count (even)");
        o_m = app->add_option("--m", m, "BA edges per new node");
        o_p = app->add_option("--p", p, "ER edge probability");
        o_seed = app->add_option("--seed", seed, "RNG seed (random if omitted)");
        o_out = app->add_option("--out", out, "edge-list TSV to write");
    }

    int execute(std::ostream& os) {
        const json cfg = load_config(config_path);
        require(fill(cfg, o_family, "family", family), "family");
        fill(cfg, o_n, "n", n);
        fill(cfg, o_k, "k", k);
        fill(cfg, o_m, "m", m);
        fill(cfg, o_p, "p", p);
        require(fill(cfg, o_out, "out", out), "out");
        if (!fill(cfg, o_seed, "seed", seed)) {
            seed = (static_cast<std::uint64_t>(std::random_device{}()) << 32) ^ std::random_device{}();
            os << "seed: " << seed << "\n";
        }

        GraphFamilyParams params;
        params.seed = seed;
        json resolved{{"family", family}, {"n", n}};
        std::string shape;
        switch (parse_family(family)) {
        case GraphFamily::lattice:
            params.shape = LatticeParams{n, k};
            resolved["k"] = k;
            shape = "k=" + std::to_string(k);
            break;
        case GraphFamily::barabasi_albert:
            params.shape = BarabasiAlbertParams{n, m};
            resolved["m"] = m;
            shape = "m=" + std::to_string(m);
            break;
        case GraphFamily::erdos_renyi:
            params.shape = ErdosRenyiParams{n, p};
            resolved["p"] = p;
            shape = "p=" + text::format_double(p);
            break;
        }
        validate(params);
        resolved["seed"] = seed;
        resolved["out"] = out;

        Manifest manifest{"generate", resolved, {{"graph", seed}}};
        const Graph g = generate(params);
        std::vector<std::string> comments{"family=" + family + " n=" + std::to_string(n) + " " + shape +
                                          " seed=" + std::to_string(seed) + " rng=" + std::string(Rng::name)};
        if (params.family() == GraphFamily::barabasi_albert) comments.push_back(std::string("ba_seed_core=") + ba_seed_core);
        write_edge_list(out, g, comments);
        manifest.outputs.push_back(out);
        manifest.write(manifest_path(out));

        double degree_sum = 0.0;
        for (double d : g.weighted_degrees()) degree_sum += d;
        os << "wrote " << out << ": " << g.node_count() << " nodes, " << g.edge_count() << " edges, mean degree "
           << text::format_double(g.node_count() ? degree_sum / static_cast<double>(g.node_count()) : 0.0) << "\n";
        return exit_ok;
    }
};

// ---------------------------------------------------------------------------

struct FitCmd {
    CLI::App* app = nullptr;
    std::string config_path, graph, covariates, targets, family = "linear", out;
    CLI::Option *o_graph{}, *o_cov{}, *o_targets{}, *o_family{}, *o_out{};

    void attach(CLI::App& root) {
        app = root.add_subcommand("fit", "Fit a linear or interaction model by least squares");
        app->add_option("--config", config_path, "JSON config or manifest");
        o_graph = app->add_option("--graph", graph, "edge-list TSV (S is its weighted degree)");
        o_cov = app->add_option("--covariates", covariates, "covariate CSV (node,x0,...)");
        o_targets = app->add_option("--targets", targets, "target CSV (node,y)");
        o_family = app->add_option("--family", family, "linear | interaction");
        o_out = app->add_option("--out", out, "model JSON to write");
    }

    int execute(std::ostream& os) {
        const json cfg = load_config(config_path);
        require(fill(cfg, o_graph, "graph", graph), "graph");
        require(fill(cfg, o_cov, "covariates", covariates), "covariates");
        require(fill(cfg, o_targets, "targets", targets), "targets");
        fill(cfg, o_family, "family", family);
        require(fill(cfg, o_out, "out", out), "out");
        const ModelFamily fam = parse_model_family(family);
        if (fam == ModelFamily::ensemble) throw UnsupportedFamilyError("fit supports linear and interaction models");

        const Graph g = read_edge_list(graph);
        const auto table = CovariateTable::bind(g, read_covariates(covariates, g.node_count()));
        const auto y = read_targets(targets, g.node_count());
        const FitReport report = fit_ols(table, y, fam);

        Manifest manifest{"fit",
                          {{"graph", graph}, {"covariates", covariates}, {"targets", targets}, {"family", family}, {"out", out}},
                          json::object()};
        manifest.config["inputs"] = {input_record(graph), input_record(covariates), input_record(targets)};
        write_model(out, report.model);
        manifest.outputs.push_back(out);
        manifest.write(manifest_path(out));

        os << "column\tcoefficient\tstd_error\n";
        for (std::size_t c = 0; c < report.columns.size(); ++c) {
            os << report.columns[c] << '\t' << text::format_double(report.coefficients[c]) << '\t'
               << text::format_double(report.standard_errors[c]) << '\n';
        }
        return exit_ok;
    }
};

// ---------------------------------------------------------------------------

struct SvCmd {
    CLI::App* app = nullptr;
    std::string config_path, graph, covariates, model, out;
    bool force_generic = false;
    CLI::Option *o_graph{}, *o_cov{}, *o_model{}, *o_out{}, *o_generic{};

    void attach(CLI::App& root) {
        app = root.add_subcommand("sv", "Compute social value for every node");
        app->add_option("--config", config_path, "JSON config or manifest");
        o_graph = app->add_option("--graph", graph, "edge-list TSV");
        o_cov = app->add_option("--covariates", covariates, "covariate CSV");
        o_model = app->add_option("--model", model, "model JSON");
        o_out = app->add_option("--out", out, "node-level CSV to write (summary goes to <out>.json)");
        o_generic = app->add_flag("--force-generic", force_generic, "evaluate the model twice per node instead of the closed form");
    }

    int execute(std::ostream& os) {
        const json cfg = load_config(config_path);
        require(fill(cfg, o_graph, "graph", graph), "graph");
        require(fill(cfg, o_cov, "covariates", covariates), "covariates");
        require(fill(cfg, o_model, "model", model), "model");
        require(fill(cfg, o_out, "out", out), "out");
        fill(cfg, o_generic, "force_generic", force_generic);

        const std::string graph_text = text::read_file(graph);
        const Graph g = parse_edge_list(graph_text);
        const auto table = CovariateTable::bind(g, read_covariates(covariates, g.node_count()));
        const Model m = read_model(model);
        const SvResult result = compute_social_value(g, table, m, force_generic);

        std::string csv = "node,delta_y,sv\n";
        for (std::size_t i = 0; i < result.sv.size(); ++i) {
            csv += std::to_string(i) + ',' + text::format_double(result.delta_y[i]) + ',' +
                   text::format_double(result.sv[i]) + '\n';
        }
        const fs::path csv_path = out;
        const fs::path summary_path = sidecar_path(csv_path);

        json summary;
        summary["nodes"] = g.node_count();
        summary["edges"] = g.edge_count();
        summary["model_family"] = family_tag(family(m));
        summary["path"] = result.path;
        summary["mean_sv"] = result.mean_sv;
        summary["var_sv"] = result.var_sv;
        summary["gfp"] = optional_number(result.gfp);
        summary["sum_sv"] = stats::sum(result.sv);
        summary["sum_delta_y"] = stats::sum(result.delta_y);
        summary["conservation_error"] = result.conservation_error;
        summary["mean_degree"] = stats::mean(g.weighted_degrees());
        summary["provenance"] = {{"graph", input_record(graph)},
                                 {"graph_metadata", graph_comments(graph_text)},
                                 {"covariates", input_record(covariates)},
                                 {"model", input_record(model)},
                                 {"library_version", SOCVAL_VERSION}};

        text::write_file(csv_path, csv);
        text::write_file(summary_path, summary.dump(2) + "\n");

        Manifest manifest{"sv",
                          {{"graph", graph}, {"covariates", covariates}, {"model", model}, {"out", out},
                           {"force_generic", force_generic}},
                          json::object()};
        manifest.outputs = {csv_path, summary_path};
        manifest.write(manifest_path(csv_path));

        os << "path " << result.path << ", mean SV " << text::format_double(result.mean_sv) << ", GFP "
           << (result.gfp ? text::format_double(*result.gfp) : std::string("undefined")) << "\n";
        return exit_ok;
    }
};

// ---------------------------------------------------------------------------

struct GfpCmd {
    CLI::App* app = nullptr;
    std::string config_path, graph, sv, out;
    CLI::Option *o_graph{}, *o_sv{}, *o_out{};

    void attach(CLI::App& root) {
        app = root.add_subcommand("gfp", "Generalized friendship paradox statistic of an SV vector");
        app->add_option("--config", config_path, "JSON config or manifest");
        o_graph = app->add_option("--graph", graph, "edge-list TSV");
        o_sv = app->add_option("--sv", sv, "CSV with 'node' and 'sv' columns (e.g. output of `sv`)");
        o_out = app->add_option("--out", out, "JSON file to write (stdout only if omitted)");
    }

    int execute(std::ostream& os) {
        const json cfg = load_config(config_path);
        require(fill(cfg, o_graph, "graph", graph), "graph");
        require(fill(cfg, o_sv, "sv", sv), "sv");
        fill(cfg, o_out, "out", out);

        const Graph g = read_edge_list(graph);
        const std::string contents = text::read_file(sv);
        const auto rows = text::lines(contents);
        if (rows.empty()) throw FormatError("sv: empty file");
        const auto header = text::split(rows[0], ',');
        const auto col = std::find(header.begin(), header.end(), "sv");
        if (header.empty() || header[0] != "node" || col == header.end()) {
            throw FormatError("sv: header must start with 'node' and contain an 'sv' column");
        }
        const auto sv_col = static_cast<std::size_t>(col - header.begin());
        std::vector<double> values(g.node_count(), 0.0);
        std::vector<char> seen(g.node_count(), 0);
        for (std::size_t line = 1; line < rows.size(); ++line) {
            if (rows[line].empty()) continue;
            const auto where = "sv line " + std::to_string(line + 1);
            const auto fields = text::split(rows[line], ',');
            if (fields.size() != header.size()) throw FormatError(where + ": wrong field count");
            const auto node = text::parse_uint(fields[0], where);
            if (node >= g.node_count()) throw InconsistentInputError(where + ": node " + std::to_string(node) + " not in graph");
            values[node] = text::parse_double(fields[sv_col], where);
            seen[node] = 1;
        }
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (!seen[i]) throw InconsistentInputError("sv: missing row for node " + std::to_string(i));

        std::size_t with_neighbors = 0;
        for (NodeId i = 0; i < g.node_count(); ++i) with_neighbors += g.degree(i) > 0;
        const json result{{"gfp", gfp(g, values)}, {"nodes_with_neighbors", with_neighbors}};
        os << result.dump(2) << "\n";
        if (!out.empty()) {
            text::write_file(out, result.dump(2) + "\n");
            Manifest manifest{"gfp", {{"graph", graph}, {"sv", sv}, {"out", out}}, json::object()};
            manifest.outputs.push_back(out);
            manifest.write(manifest_path(out));
        }
        return exit_ok;
    }
};

// ---------------------------------------------------------------------------

struct SweepCmd {
    CLI::App* app = nullptr;
    std::string config_path, out;
    std::uint64_t seed = 0;
    std::size_t replicates = 0;
    CLI::Option *o_seed{}, *o_reps{}, *o_out{};

    void attach(CLI::App& root) {
        app = root.add_subcommand("sweep", "Coefficient x correlation heatmap sweep");
        app->add_option("--config", config_path, "sweep config JSON or manifest");
        o_seed = app->add_option("--seed", seed, "base seed (required here or in the config)");
        o_reps = app->add_option("--replicates", replicates, "replicates per cell");
        o_out = app->add_option("--out", out, "output directory");
    }

    int execute(std::ostream& os) {
        json cfg = load_config(config_path);
        if (cfg.contains("out")) {
            if (o_out->count() == 0) out = cfg.at("out").get<std::string>();
            cfg.erase("out");
        }
        require(!out.empty(), "out");
        if (o_seed->count()) cfg["seed"] = seed;
        if (o_reps->count()) cfg["replicates"] = replicates;
        const SweepConfig config = sweep_config_from_json(cfg);

        json resolved = to_json(config);
        Manifest manifest{"sweep", resolved, {{"base_seed", config.seed}, {"cell_seed", "base_seed + cell_index"}}};
        manifest.config["out"] = out;

        const auto results = run_heatmap_sweep(config);
        const fs::path dir = out;
        for (const auto& r : results) {
            const fs::path file = dir / ("sweep_" + family_tag(r.family) + ".csv");
            text::write_file(file, format_sweep_csv(r));
            manifest.outputs.push_back(file);
            os << family_tag(r.family) << ": " << r.cells.size() << " cells, max conservation error "
               << text::format_double(r.max_conservation_error) << "\n";
        }
        manifest.write(dir / "manifest.json");
        return exit_ok;
    }
};

// ---------------------------------------------------------------------------

struct DistributionCmd {
    CLI::App* app = nullptr;
    std::string config_path, out;
    std::uint64_t seed = 0;
    CLI::Option *o_seed{}, *o_out{};

    void attach(CLI::App& root) {
        app = root.add_subcommand("distribution", "SV distributions on lattice, BA and ER graphs");
        app->add_option("--config", config_path, "distribution config JSON or manifest");
        o_seed = app->add_option("--seed", seed, "base seed (required here or in the config)");
        o_out = app->add_option("--out", out, "output directory");
    }

    int execute(std::ostream& os) {
        json cfg = load_config(config_path);
        if (cfg.contains("out")) {
            if (o_out->count() == 0) out = cfg.at("out").get<std::string>();
            cfg.erase("out");
        }
        require(!out.empty(), "out");
        if (o_seed->count()) cfg["seed"] = seed;
        const DistributionConfig config = distribution_config_from_json(cfg);

        Manifest manifest{"distribution", to_json(config), {{"base_seed", config.seed}}};
        manifest.config["out"] = out;
        const auto report = run_distribution_experiment(config);

        const fs::path dir = out;
        json summary = json::array();
        for (const auto& run : report.runs) {
            const std::string stem = family_tag(run.family) + "_" + family_tag(run.model);
            const fs::path nodes = dir / ("distribution_" + stem + ".csv");
            const fs::path hist = dir / ("histogram_" + stem + ".csv");
            text::write_file(nodes, format_distribution_csv(run));
            text::write_file(hist, format_histogram_csv(run.histogram));
            manifest.outputs.push_back(nodes);
            manifest.outputs.push_back(hist);
            manifest.seeds[stem] = {{"graph", run.graph_seed}, {"covariates", run.covariate_seed}};
            summary.push_back({{"family", family_tag(run.family)},
                               {"model", family_tag(run.model)},
                               {"mean_sv", run.result.mean_sv},
                               {"var_sv", run.result.var_sv},
                               {"gfp", optional_number(run.result.gfp)},
                               {"p999_sv", stats::quantile(run.result.sv, 0.999)},
                               {"bin_origin", run.histogram.origin},
                               {"bin_width", run.histogram.width},
                               {"bins", run.histogram.counts.size()}});
            os << stem << ": mean SV " << text::format_double(run.result.mean_sv) << "\n";
        }
        const fs::path summary_path = dir / "summary.json";
        text::write_file(summary_path, summary.dump(2) + "\n");
        manifest.outputs.push_back(summary_path);
        manifest.write(dir / "manifest.json");
        return exit_ok;
    }
};

// ---------------------------------------------------------------------------

struct TheoryCmd {
    CLI::App* app = nullptr;
    std::string config_path, family, model, out;
    std::size_t n = 10000, k = 4, m = 2;
    double p = 4e-4, beta_s = 1.0;
    std::vector<double> beta_xs, mu_x, var_x;
    CLI::Option *o_family{}, *o_model{}, *o_n{}, *o_k{}, *o_m{}, *o_p{}, *o_bs{}, *o_bxs{}, *o_mu{}, *o_var{}, *o_out{};

    void attach(CLI::App& root) {
        app = root.add_subcommand("theory", "Expected SV per graph family (mean and variance)");
        app->add_option("--config", config_path, "JSON config or manifest");
        o_family = app->add_option("--family", family, "lattice | ba | er (all three if omitted)");
        o_model = app->add_option("--model", model, "linear | interaction (interaction when --beta-xs is given)");
        o_n = app->add_option("--n", n, "node count");
        o_k = app->add_option("--k", k, "lattice neighbor count");
        o_m = app->add_option("--m", m, "BA edges per new node");
        o_p = app->add_option("--p", p, "ER edge probability");
        o_bs = app->add_option("--beta-s", beta_s, "social coefficient");
        o_bxs = app->add_option("--beta-xs", beta_xs, "covariate-by-S interaction coefficients");
        o_mu = app->add_option("--mu-x", mu_x, "covariate means");
        o_var = app->add_option("--var-x", var_x, "covariate variances");
        o_out = app->add_option("--out", out, "JSON file to write as well as stdout");
    }

    int execute(std::ostream& os) {
        const json cfg = load_config(config_path);
        const bool one_family = fill(cfg, o_family, "family", family);
        fill(cfg, o_n, "n", n);
        fill(cfg, o_k, "k", k);
        fill(cfg, o_m, "m", m);
        fill(cfg, o_p, "p", p);
        fill(cfg, o_bs, "beta_s", beta_s);
        fill(cfg, o_bxs, "beta_xs", beta_xs);
        fill(cfg, o_mu, "mu_x", mu_x);
        fill(cfg, o_var, "var_x", var_x);
        fill(cfg, o_out, "out", out);
        if (!fill(cfg, o_model, "model", model)) model = beta_xs.empty() ? "linear" : "interaction";

        Model mdl;
        CovariateMoments moments;
        switch (parse_model_family(model)) {
        case ModelFamily::linear: mdl = LinearModel{0.0, {}, beta_s}; break;
        case ModelFamily::interaction: {
            if (beta_xs.empty()) throw ParameterError("interaction model needs --beta-xs");
            const std::size_t d = beta_xs.size();
            if (mu_x.size() != d) throw ParameterError("--mu-x needs one mean per --beta-xs entry");
            if (var_x.empty()) var_x.assign(d, 0.0);
            mdl = InteractionModel{0.0, std::vector<double>(d, 0.0), beta_s, Matrix(d, d), beta_xs};
            moments = {mu_x, var_x};
            break;
        }
        case ModelFamily::ensemble: throw UnsupportedFamilyError("no closed-form expectation for ensemble models");
        }

        auto row = [&](GraphFamily f) {
            GraphFamilyParams params;
            switch (f) {
            case GraphFamily::lattice: params.shape = LatticeParams{n, k}; break;
            case GraphFamily::barabasi_albert: params.shape = BarabasiAlbertParams{n, m}; break;
            case GraphFamily::erdos_renyi: params.shape = ErdosRenyiParams{n, p}; break;
            }
            const auto pred = expected_sv(params, mdl, moments);
            json j{{"family", family_tag(f)},
                   {"model", family_tag(pred.model_family)},
                   {"mean", pred.expected_mean_sv},
                   {"variance", optional_number(pred.expected_var_sv)}};
            if (!pred.note.empty()) j["note"] = pred.note;
            return j;
        };

        json result;
        if (one_family) {
            result = row(parse_family(family));
        } else {
            result = json::array();
            for (GraphFamily f : {GraphFamily::lattice, GraphFamily::barabasi_albert, GraphFamily::erdos_renyi})
                result.push_back(row(f));
        }
        os << result.dump(2) << "\n";
        if (!out.empty()) {
            text::write_file(out, result.dump(2) + "\n");
            json resolved{{"model", model}, {"n", n},           {"k", k},         {"m", m},
                          {"p", p},         {"beta_s", beta_s}, {"out", out}};
            if (one_family) resolved["family"] = family;
            if (!beta_xs.empty()) {
                resolved["beta_xs"] = beta_xs;
                resolved["mu_x"] = mu_x;
                resolved["var_x"] = var_x;
            }
            Manifest manifest{"theory", resolved, json::object()};
            manifest.outputs.push_back(out);
            manifest.write(manifest_path(out));
        }
        return exit_ok;
    }
};

unsigned threads_from_env() {
    if (const char* env = std::getenv("SOCVAL_THREADS")) {
        try {
            return static_cast<unsigned>(text::parse_uint(env, "SOCVAL_THREADS"));
        } catch (const Error&) {
            throw ParameterError("SOCVAL_THREADS must be a nonnegative integer");
        }
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"socval: social value of nodes in a network via synthetic control"};
    app.require_subcommand(1);
    app.fallthrough();
    unsigned threads = 0;
    auto* o_threads = app.add_option("--threads", threads, "worker threads (default: SOCVAL_THREADS or all cores)");

    GenerateCmd generate_cmd;
    FitCmd fit_cmd;
    SvCmd sv_cmd;
    GfpCmd gfp_cmd;
    SweepCmd sweep_cmd;
    DistributionCmd distribution_cmd;
    TheoryCmd theory_cmd;
    generate_cmd.attach(app);
    fit_cmd.attach(app);
    sv_cmd.attach(app);
    gfp_cmd.attach(app);
    sweep_cmd.attach(app);
    distribution_cmd.attach(app);
    theory_cmd.attach(app);

    std::vector<const char*> argv{"socval"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_validation;
    }

    try {
        parallel::set_max_threads(o_threads->count() ? threads : threads_from_env());
        if (generate_cmd.app->parsed()) return generate_cmd.execute(out);
        if (fit_cmd.app->parsed()) return fit_cmd.execute(out);
        if (sv_cmd.app->parsed()) return sv_cmd.execute(out);
        if (gfp_cmd.app->parsed()) return gfp_cmd.execute(out);
        if (sweep_cmd.app->parsed()) return sweep_cmd.execute(out);
        if (distribution_cmd.app->parsed()) return distribution_cmd.execute(out);
        if (theory_cmd.app->parsed()) return theory_cmd.execute(out);
    } catch (const SingularFitError& e) {
        err << "error: " << e.what() << "\n";
        return exit_numerical;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return exit_io;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_validation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_failure;
}

} // namespace socval::cli
