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

#include "qstwalk/runner.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"

using namespace qstwalk;

namespace {

ScenarioConfig scenario(int n, int k, Vertex s, Vertex r, int steps = 200) {
    ScenarioConfig cfg;
    cfg.seed_path = n;
    cfg.wings = k;
    cfg.sender = s;
    cfg.receiver = r;
    cfg.steps = steps;
    return cfg;
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("qstwalk_runner_test_" + name)).string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

template <typename Fn>
std::string config_error_field(Fn fn) {
    try {
        fn();
    } catch (const ConfigError& e) {
        return e.field();
    }
    return "<no error>";
}

}  // namespace

TEST(runner, p2_alternates) {
    RunResult run = run_scenario(scenario(2, 0, 0, 1, 10));
    ASSERT_EQ(run.fidelity.horizon(), 10);
    for (int t = 1; t <= 10; ++t) EXPECT_NEAR(run.fidelity.at(t), t % 2 ? 1.0 : 0.0, 1e-12) << "t=" << t;
    EXPECT_EQ(run.summary.argmax_t, 1);
    EXPECT_EQ(run.summary.peak_times, (std::vector<int>{1, 3, 5, 7, 9}));
    EXPECT_NEAR(run.summary.average_fidelity, 0.5, 1e-12);
}

TEST(runner, b3_case_studies) {
    RunResult p2 = run_scenario(scenario(2, 3, 5, 6));
    EXPECT_GE(p2.fidelity.at(57), 0.8);
    EXPECT_GE(p2.fidelity.at(99), 0.8);
    auto& peaks = p2.summary.peak_times;
    EXPECT_NE(std::find(peaks.begin(), peaks.end(), 57), peaks.end());
    EXPECT_NE(std::find(peaks.begin(), peaks.end(), 99), peaks.end());

    RunResult p3 = run_scenario(scenario(3, 3, 5, 6));
    EXPECT_NEAR(p3.summary.max_fidelity, 0.73, 0.01);
    EXPECT_EQ(p3.summary.argmax_t, 34);
    EXPECT_NEAR(p3.fidelity.at(100), 0.73, 0.01);
}

TEST(runner, config_errors_name_the_field) {
    EXPECT_EQ(config_error_field([] { run_scenario(scenario(2, 1, 1, 1)); }), "receiver");
    EXPECT_EQ(config_error_field([] { run_scenario(scenario(2, 1, 7, 1)); }), "sender");
    EXPECT_EQ(config_error_field([] { run_scenario(scenario(2, 1, 0, 9)); }), "receiver");
    EXPECT_EQ(config_error_field([] { run_scenario(scenario(2, 1, 0, 1, 0)); }), "steps");
    EXPECT_EQ(config_error_field([] { run_scenario(scenario(0, 1, 0, 1)); }), "seed_path");
    EXPECT_EQ(config_error_field([] { run_scenario(scenario(2, -1, 0, 1)); }), "wings");

    ScenarioConfig bad_noise = scenario(2, 1, 0, 1);
    bad_noise.noise.family = NoiseFamily::rtn;
    bad_noise.noise.rtn.gamma = -1;
    EXPECT_EQ(config_error_field([&] { run_scenario(bad_noise); }), "rtn.gamma");

    const std::string path = temp_path("split.txt");
    std::ofstream(path) << "n 4\n0 1\n2 3\n";
    ScenarioConfig split = scenario(2, 1, 0, 1);
    split.graph_file = path;
    EXPECT_EQ(config_error_field([&] { run_scenario(split); }), "graph");
    split.graph_file = temp_path("does_not_exist.txt");
    EXPECT_EQ(config_error_field([&] { run_scenario(split); }), "graph_file");
    std::remove(path.c_str());
}

TEST(runner, graph_file_matches_generated_graph) {
    const std::string path = temp_path("b2.txt");
    {
        std::ofstream out(path);
        write_edge_list(out, build_butterfly(build_path(2), 2));
    }
    ScenarioConfig from_file = scenario(2, 0, 2, 5, 50);
    from_file.graph_file = path;
    RunResult a = run_scenario(from_file);
    RunResult b = run_scenario(scenario(2, 2, 2, 5, 50));
    EXPECT_EQ(a.fidelity.values, b.fidelity.values);
    std::remove(path.c_str());
}

TEST(runner, sweep_b1_reproduces_table_rows) {
    Graph b1 = build_butterfly(build_path(2), 1);
    auto sweep = sweep_placements(b1, 200, NoiseSpec{});
    ASSERT_EQ(sweep.size(), 12u);
    EXPECT_NEAR(sweep.front().average_fidelity, 0.25, 1e-12);
    bool found_12 = false;
    for (const auto& s : sweep) {
        if (std::abs(s.average_fidelity - 0.25) < 1e-12 && s.sender == 1 && s.receiver == 2) found_12 = true;
        if (s.sender == 0 && s.receiver == 1) EXPECT_NEAR(s.average_fidelity, 0.125, 1e-3);
        if (s.sender == 0 && s.receiver == 2) EXPECT_NEAR(s.average_fidelity, 0.125, 1e-3);
    }
    EXPECT_TRUE(found_12);
    for (std::size_t i = 1; i < sweep.size(); ++i) {
        EXPECT_GE(sweep[i - 1].average_fidelity, sweep[i].average_fidelity - 1e-12);
    }
    // The equal-average block at the top is ordered by (s, r).
    EXPECT_EQ(std::pair(sweep[0].sender, sweep[0].receiver), std::pair(0, 3));
    EXPECT_EQ(std::pair(sweep[1].sender, sweep[1].receiver), std::pair(1, 2));
}

TEST(runner, sweep_b3_p3_ranks_5_6_above_reference_pairs) {
    Graph g = build_butterfly(build_path(3), 3);
    auto sweep = sweep_placements(g, 200, NoiseSpec{});
    EXPECT_EQ(sweep.size(), 132u);
    auto rank_of = [&](Vertex s, Vertex r) {
        for (std::size_t i = 0; i < sweep.size(); ++i) {
            if (sweep[i].sender == s && sweep[i].receiver == r) return i;
        }
        return sweep.size();
    };
    for (auto [s, r] : {std::pair{0, 2}, std::pair{0, 3}, std::pair{0, 4}, std::pair{4, 6}}) {
        EXPECT_LT(rank_of(5, 6), rank_of(s, r)) << s << "," << r;
    }
}

TEST(runner, sweep_p2_symmetric) {
    auto sweep = sweep_placements(build_path(2), 20, NoiseSpec{});
    ASSERT_EQ(sweep.size(), 2u);
    EXPECT_EQ(sweep[0].average_fidelity, sweep[1].average_fidelity);
    EXPECT_EQ(sweep[0].peak_times, sweep[1].peak_times);
    EXPECT_EQ(sweep[0].sender, 0);
}

TEST(runner, csv_and_json_export) {
    ScenarioConfig cfg = scenario(2, 2, 0, 1, 3);
    RunResult run = run_scenario(cfg);
    std::ostringstream csv;
    write_csv(csv, run);
    std::istringstream lines(csv.str());
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(lines, line)) rows.push_back(line);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0], "t,fidelity,coherence,fidelity_noisy,coherence_noisy");
    EXPECT_EQ(run.fidelity.values, run.fidelity_noisy.values);
    EXPECT_EQ(run.coherence, run.coherence_noisy);
}

TEST(runner, exported_files_round_trip) {
    ScenarioConfig cfg = scenario(2, 3, 5, 6, 200);
    cfg.noise.family = NoiseFamily::oun;
    cfg.out_csv = temp_path("run.csv");
    cfg.out_json = temp_path("run.json");
    RunResult run = run_scenario(cfg);
    export_run(run, cfg.out_csv, cfg.out_json);

    std::ifstream csv(*cfg.out_csv);
    std::string line;
    std::getline(csv, line);
    double sum = 0;
    int rows = 0;
    while (std::getline(csv, line)) {
        std::vector<double> cols;
        std::stringstream fields(line);
        std::string cell;
        while (std::getline(fields, cell, ',')) cols.push_back(std::stod(cell));
        ASSERT_EQ(cols.size(), 5u);
        EXPECT_EQ(static_cast<int>(cols[0]), ++rows);
        sum += cols[3];
    }
    EXPECT_EQ(rows, 200);
    auto summary = nlohmann::json::parse(slurp(*cfg.out_json));
    EXPECT_NEAR(sum / rows, summary["average_fidelity"].get<double>(), 1e-12);
    EXPECT_EQ(summary["noise_family"], "oun");
    EXPECT_EQ(summary["argmax_t"].get<int>(), run.summary.argmax_t);

    // Byte-identical on a second run.
    const std::string first = slurp(*cfg.out_csv);
    export_run(run_scenario(cfg), cfg.out_csv, std::nullopt);
    EXPECT_EQ(slurp(*cfg.out_csv), first);

    std::remove(cfg.out_csv->c_str());
    std::remove(cfg.out_json->c_str());
    EXPECT_THROW(export_run(run, std::string("/nonexistent/dir/x.csv"), std::nullopt), std::runtime_error);
}

TEST(runner, noisy_series_stay_close_when_channel_is_weak) {
    for (NoiseFamily family : {NoiseFamily::rtn, NoiseFamily::oun}) {
        ScenarioConfig cfg = scenario(2, 3, 5, 6);
        cfg.noise.family = family;
        RunResult run = run_scenario(cfg);
        for (int t = 1; t <= 200; ++t) {
            const double noisy = run.fidelity_noisy.at(t);
            EXPECT_GE(noisy, 0.0);
            EXPECT_LE(noisy, 1.0);
            // The second Kraus branch carries weight (1 - c)/2.
            const double c = family == NoiseFamily::rtn ? rtn_coefficient(cfg.noise.rtn, t)
                                                        : oun_coefficient(cfg.noise.oun, t);
            EXPECT_LE(std::abs(noisy - run.fidelity.at(t)), (1 - c) / 2 + 1e-12) << "t=" << t;
        }
    }
}

TEST(runner, per_step_noise_mode) {
    ScenarioConfig cfg = scenario(2, 2, 0, 1, 60);
    cfg.noise_mode = NoiseMode::per_step;
    RunResult clean = run_scenario(cfg);
    EXPECT_EQ(clean.fidelity.values, clean.fidelity_noisy.values);

    cfg.noise.family = NoiseFamily::nmad;
    RunResult damped = run_scenario(cfg);
    for (double f : damped.fidelity_noisy.values) {
        EXPECT_GE(f, 0.0);
        EXPECT_LE(f, 1.0);
    }
    // At t = 1 both modes apply a single channel to the same state.
    cfg.noise_mode = NoiseMode::terminal;
    EXPECT_NEAR(run_scenario(cfg).fidelity_noisy.at(1), damped.fidelity_noisy.at(1), 1e-14);
}

TEST(runner, parse_scenario) {
    ScenarioConfig cfg = parse_scenario(R"({
        "seed_path": 3, "wings": 3, "sender": 4, "receiver": 6, "steps": 120,
        "noise": "rtn", "rtn.a": 0.2, "rtn.gamma": 0.02,
        "receiver_convention": "incoming", "peak_threshold": 0.5, "noise_mode": "per-step",
        "out_csv": "a.csv", "out_json": "a.json"
    })");
    EXPECT_EQ(cfg.seed_path, 3);
    EXPECT_EQ(cfg.wings, 3);
    EXPECT_EQ(cfg.sender, 4);
    EXPECT_EQ(cfg.receiver, 6);
    EXPECT_EQ(cfg.steps, 120);
    EXPECT_EQ(cfg.noise.family, NoiseFamily::rtn);
    EXPECT_EQ(cfg.noise.rtn.a, 0.2);
    EXPECT_EQ(cfg.noise.rtn.gamma, 0.02);
    EXPECT_EQ(cfg.receiver_convention, ReceiverConvention::incoming);
    EXPECT_EQ(cfg.noise_mode, NoiseMode::per_step);
    EXPECT_EQ(cfg.peak_threshold, 0.5);
    EXPECT_EQ(cfg.out_csv, "a.csv");

    ScenarioConfig nm = parse_scenario(R"({"oun.lambda": 2, "oun.gamma": 0.1, "nmad.g": 0.5, "nmad.gamma": 1})");
    EXPECT_EQ(nm.noise.oun.lambda, 2.0);
    EXPECT_EQ(nm.noise.nmad.gamma, 1.0);

    EXPECT_EQ(config_error_field([] { parse_scenario(R"({"colour": 1})"); }), "colour");
    EXPECT_EQ(config_error_field([] { parse_scenario(R"({"noise": "pink"})"); }), "noise");
    EXPECT_EQ(config_error_field([] { parse_scenario(R"({"steps": "many"})"); }), "steps");
    EXPECT_EQ(config_error_field([] { parse_scenario("[1, 2]"); }), "scenario");
    EXPECT_EQ(config_error_field([] { parse_scenario("{"); }), "scenario");
}

TEST(runner, write_matrix_format) {
    MatrixXc m(1, 2);
    m << Complex(1, 0), Complex(-0.5, 2);
    std::ostringstream out;
    write_matrix(out, m);
    EXPECT_EQ(out.str(), "1 2\n1+0i -0.5+2i\n");
}

TEST(runner, reproduce_tables_within_tolerance) {
    for (const auto& check : reproduce_tables()) {
        EXPECT_NEAR(check.average, check.row.expected, 1e-3)
            << "table " << check.row.table << " (" << check.row.sender << "," << check.row.receiver << ")";
    }
}
