// Copyright 2026 The qstwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: `run`, `sweep` and `tables`.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qstwalk/runner.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct Flags {
    std::string scenario;
    int seed_path = 2;
    int wings = 0;
    std::string graph_file;
    int sender = 0;
    int receiver = 1;
    int steps = 200;
    std::string noise = "none";
    std::string noise_mode = "terminal";
    double rtn_a = 0, rtn_gamma = 0, oun_lambda = 0, oun_gamma = 0, nmad_g = 0, nmad_gamma = 0;
    std::string receiver_convention = "outgoing";
    double peak_threshold = 0.8;
    std::string out_csv;
    std::string out_json;
    bool dump_operators = false;
};

struct Options {
    CLI::Option* scenario;
    CLI::Option* seed_path;
    CLI::Option* wings;
    CLI::Option* graph_file;
    CLI::Option* sender;
    CLI::Option* receiver;
    CLI::Option* steps;
    CLI::Option* noise;
    CLI::Option* noise_mode;
    CLI::Option* rtn_a;
    CLI::Option* rtn_gamma;
    CLI::Option* oun_lambda;
    CLI::Option* oun_gamma;
    CLI::Option* nmad_g;
    CLI::Option* nmad_gamma;
    CLI::Option* receiver_convention;
    CLI::Option* peak_threshold;
    CLI::Option* out_csv;
    CLI::Option* out_json;
};

Options add_scenario_options(CLI::App* app, Flags& f, bool with_placement) {
    Options o{};
    o.scenario = app->add_option("--scenario", f.scenario, "JSON scenario file; flags override its fields");
    o.seed_path = app->add_option("--seed-path", f.seed_path, "Path-graph seed size n");
    o.wings = app->add_option("--wings", f.wings, "Number of butterfly wings k");
    o.graph_file = app->add_option("--graph-file", f.graph_file, "Edge-list graph file (overrides seed/wings)");
    if (with_placement) {
        o.sender = app->add_option("--sender", f.sender, "Sender vertex");
        o.receiver = app->add_option("--receiver", f.receiver, "Receiver vertex");
    }
    o.steps = app->add_option("--steps", f.steps, "Number of walk steps T");
    o.noise = app->add_option("--noise", f.noise, "Noise family")
                  ->check(CLI::IsMember({"none", "rtn", "oun", "nmad"}));
    o.noise_mode = app->add_option("--noise-mode", f.noise_mode, "Channel placement")
                       ->check(CLI::IsMember({"terminal", "per-step"}));
    o.rtn_a = app->add_option("--rtn-a", f.rtn_a, "RTN coupling strength a");
    o.rtn_gamma = app->add_option("--rtn-gamma", f.rtn_gamma, "RTN fluctuation rate gamma");
    o.oun_lambda = app->add_option("--oun-lambda", f.oun_lambda, "OUN relaxation parameter lambda");
    o.oun_gamma = app->add_option("--oun-gamma", f.oun_gamma, "OUN bandwidth gamma");
    o.nmad_g = app->add_option("--nmad-g", f.nmad_g, "NMAD spectral width g");
    o.nmad_gamma = app->add_option("--nmad-gamma", f.nmad_gamma, "NMAD emission rate gamma");
    o.receiver_convention = app->add_option("--receiver-convention", f.receiver_convention,
                                            "Arcs carrying the receiver state")
                                ->check(CLI::IsMember({"incoming", "outgoing"}));
    o.peak_threshold = app->add_option("--peak-threshold", f.peak_threshold, "Fidelity threshold for peak times");
    o.out_csv = app->add_option("--out-csv", f.out_csv, "Write CSV output here");
    o.out_json = app->add_option("--out-json", f.out_json, "Write JSON summary here");
    return o;
}

qstwalk::ScenarioConfig to_config(const Flags& f, const Options& o) {
    using namespace qstwalk;
    ScenarioConfig cfg;
    if (*o.scenario) cfg = load_scenario(f.scenario);
    auto given = [](CLI::Option* opt) { return opt != nullptr && opt->count() > 0; };
    if (given(o.seed_path)) cfg.seed_path = f.seed_path;
    if (given(o.wings)) cfg.wings = f.wings;
    if (given(o.graph_file)) cfg.graph_file = f.graph_file;
    if (given(o.sender)) cfg.sender = f.sender;
    if (given(o.receiver)) cfg.receiver = f.receiver;
    if (given(o.steps)) cfg.steps = f.steps;
    if (given(o.noise)) cfg.noise.family = parse_noise_family(f.noise);
    if (given(o.noise_mode)) cfg.noise_mode = parse_noise_mode(f.noise_mode);
    if (given(o.rtn_a)) cfg.noise.rtn.a = f.rtn_a;
    if (given(o.rtn_gamma)) cfg.noise.rtn.gamma = f.rtn_gamma;
    if (given(o.oun_lambda)) cfg.noise.oun.lambda = f.oun_lambda;
    if (given(o.oun_gamma)) cfg.noise.oun.gamma = f.oun_gamma;
    if (given(o.nmad_g)) cfg.noise.nmad.g = f.nmad_g;
    if (given(o.nmad_gamma)) cfg.noise.nmad.gamma = f.nmad_gamma;
    if (given(o.receiver_convention)) cfg.receiver_convention = parse_receiver_convention(f.receiver_convention);
    if (given(o.peak_threshold)) cfg.peak_threshold = f.peak_threshold;
    if (given(o.out_csv)) cfg.out_csv = f.out_csv;
    if (given(o.out_json)) cfg.out_json = f.out_json;
    return cfg;
}

void dump_operators(const qstwalk::ScenarioConfig& cfg) {
    using namespace qstwalk;
    const Graph g = resolve_graph(cfg);
    validate(cfg, g);
    const ArcBasis basis(g);
    const auto op = build_walk_operator<Complex>(g, basis, cfg.sender, cfg.receiver);
    std::cout << "# arcs";
    for (const Arc& a : basis.arcs()) std::cout << " (" << a.tail << "," << a.head << ")";
    std::cout << "\n# coin\n";
    write_matrix(std::cout, op.coin);
    std::cout << "# shift\n";
    write_matrix(std::cout, op.shift);
    std::cout << "# evolution\n";
    write_matrix(std::cout, op.evolution);
}

int cmd_run(const Flags& f, const Options& o) {
    using namespace qstwalk;
    const ScenarioConfig cfg = to_config(f, o);
    if (f.dump_operators) dump_operators(cfg);
    const RunResult result = run_scenario(cfg);
    export_run(result, cfg.out_csv, cfg.out_json);
    write_summary_json(std::cout, result.summary);
    return 0;
}

int cmd_sweep(const Flags& f, const Options& o) {
    using namespace qstwalk;
    ScenarioConfig cfg = to_config(f, o);
    const Graph g = resolve_graph(cfg);
    if (g.num_vertices() < 2) throw ConfigError("graph", "sweep needs at least two vertices");
    if (!g.is_connected()) throw ConfigError("graph", "graph is not connected");
    if (cfg.steps < 1) throw ConfigError("steps", "must be >= 1");
    const auto sweep = sweep_placements(g, cfg.steps, cfg.noise, cfg.receiver_convention, cfg.peak_threshold);

    std::printf("%4s %4s %4s %18s %14s %8s\n", "rank", "s", "r", "average_fidelity", "max_fidelity", "argmax_t");
    int rank = 1;
    for (const auto& s : sweep) {
        std::printf("%4d %4d %4d %18.10f %14.10f %8d\n", rank++, s.sender, s.receiver, s.average_fidelity,
                    s.max_fidelity, s.argmax_t);
    }
    if (cfg.out_json) {
        std::ofstream out(*cfg.out_json);
        if (!out) throw std::runtime_error("cannot open '" + *cfg.out_json + "' for writing");
        write_sweep_json(out, sweep);
    }
    if (cfg.out_csv) {
        std::ofstream out(*cfg.out_csv);
        if (!out) throw std::runtime_error("cannot open '" + *cfg.out_csv + "' for writing");
        out << "sender,receiver,average_fidelity,max_fidelity,argmax_t\n";
        for (const auto& s : sweep) {
            char buf[128];
            std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g,%d\n", s.sender, s.receiver, s.average_fidelity,
                          s.max_fidelity, s.argmax_t);
            out << buf;
        }
    }
    return 0;
}

int cmd_tables(int steps, const std::string& convention) {
    using namespace qstwalk;
    const auto checks = reproduce_tables(steps, parse_receiver_convention(convention));
    std::printf("%5s %6s %5s %3s %3s %10s %12s %12s %14s\n", "table", "seed", "wings", "s", "r", "reference",
                "average", "residual", "residual(t0)");
    for (const auto& c : checks) {
        std::printf("%5d %6s %5d %3d %3d %10.5f %12.6f %12.2e %14.2e\n", c.row.table,
                    ("P_" + std::to_string(c.row.seed_path)).c_str(), c.row.wings, c.row.sender, c.row.receiver,
                    c.row.expected, c.average, c.average - c.row.expected, c.average_shifted - c.row.expected);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete-time quantum walk state transfer on butterfly graphs"};
    app.require_subcommand(1);

    Flags run_flags;
    auto* run = app.add_subcommand("run", "Simulate a single sender/receiver scenario");
    const Options run_opts = add_scenario_options(run, run_flags, true);
    run->add_flag("--dump-operators", run_flags.dump_operators, "Print coin, shift and evolution matrices");

    Flags sweep_flags;
    auto* sweep = app.add_subcommand("sweep", "Rank all ordered sender/receiver placements");
    const Options sweep_opts = add_scenario_options(sweep, sweep_flags, false);

    int table_steps = 200;
    std::string table_convention = "outgoing";
    auto* tables = app.add_subcommand("tables", "Reproduce the reference average-fidelity tables");
    tables->add_option("--steps", table_steps, "Number of walk steps T");
    tables->add_option("--receiver-convention", table_convention, "Arcs carrying the receiver state")
        ->check(CLI::IsMember({"incoming", "outgoing"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (*run) return cmd_run(run_flags, run_opts);
        if (*sweep) return cmd_sweep(sweep_flags, sweep_opts);
        if (*tables) return cmd_tables(table_steps, table_convention);
    } catch (const qstwalk::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const qstwalk::NumericDomainError& e) {
        std::cerr << "numeric domain error: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
