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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace qstwalk {

using nlohmann::json;

std::string_view to_string(NoiseMode mode) {
    return mode == NoiseMode::terminal ? "terminal" : "per-step";
}

std::string_view to_string(ReceiverConvention convention) {
    return convention == ReceiverConvention::incoming ? "incoming" : "outgoing";
}

NoiseMode parse_noise_mode(std::string_view name) {
    if (name == "terminal") return NoiseMode::terminal;
    if (name == "per-step") return NoiseMode::per_step;
    throw std::invalid_argument("unknown noise mode '" + std::string(name) + "'");
}

ReceiverConvention parse_receiver_convention(std::string_view name) {
    if (name == "incoming") return ReceiverConvention::incoming;
    if (name == "outgoing") return ReceiverConvention::outgoing;
    throw std::invalid_argument("unknown receiver convention '" + std::string(name) + "'");
}

Graph resolve_graph(const ScenarioConfig& cfg) {
    if (cfg.graph_file) {
        try {
            return read_edge_list_file(*cfg.graph_file);
        } catch (const std::exception& e) {
            throw ConfigError("graph_file", e.what());
        }
    }
    if (cfg.seed_path < 1) throw ConfigError("seed_path", "must be >= 1");
    if (cfg.wings < 0) throw ConfigError("wings", "must be >= 0");
    return build_butterfly(build_path(cfg.seed_path), cfg.wings);
}

namespace {

void require_positive_field(double value, const char* field) {
    if (!(value > 0.0) || !std::isfinite(value)) throw ConfigError(field, "must be positive");
}

}  // namespace

void validate(const ScenarioConfig& cfg, const Graph& g) {
    if (!g.contains(cfg.sender)) throw ConfigError("sender", "vertex " + std::to_string(cfg.sender) + " not in graph");
    if (!g.contains(cfg.receiver)) {
        throw ConfigError("receiver", "vertex " + std::to_string(cfg.receiver) + " not in graph");
    }
    if (cfg.sender == cfg.receiver) throw ConfigError("receiver", "must differ from sender");
    if (cfg.steps < 1) throw ConfigError("steps", "must be >= 1");
    if (!g.is_connected()) throw ConfigError("graph", "graph is not connected");
    switch (cfg.noise.family) {
        case NoiseFamily::none: break;
        case NoiseFamily::rtn:
            require_positive_field(cfg.noise.rtn.a, "rtn.a");
            require_positive_field(cfg.noise.rtn.gamma, "rtn.gamma");
            break;
        case NoiseFamily::oun:
            require_positive_field(cfg.noise.oun.lambda, "oun.lambda");
            require_positive_field(cfg.noise.oun.gamma, "oun.gamma");
            break;
        case NoiseFamily::nmad:
            require_positive_field(cfg.noise.nmad.g, "nmad.g");
            require_positive_field(cfg.noise.nmad.gamma, "nmad.gamma");
            break;
    }
}

RunSummary summarize(const FidelitySeries& series, double peak_threshold) {
    RunSummary s;
    s.average_fidelity = average_fidelity(series);
    s.max_fidelity = series.values.front();
    s.argmax_t = 1;
    for (int t = 1; t <= series.horizon(); ++t) {
        const double f = series.at(t);
        if (f > s.max_fidelity) {
            s.max_fidelity = f;
            s.argmax_t = t;
        }
        if (f >= peak_threshold) s.peak_times.push_back(t);
    }
    return s;
}

RunResult run_scenario(const ScenarioConfig& cfg) { return run_scenario(resolve_graph(cfg), cfg); }

RunResult run_scenario(const Graph& g, const ScenarioConfig& cfg) {
    validate(cfg, g);
    const ArcBasis basis(g);
    const auto op = build_walk_operator<Complex>(g, basis, cfg.sender, cfg.receiver);
    const VectorXc target = receiver_state<Complex>(g, basis, cfg.receiver, cfg.receiver_convention);
    VectorXc psi = sender_state<Complex>(g, basis, cfg.sender);
    MatrixXc rho;
    if (cfg.noise_mode == NoiseMode::per_step) rho = density_matrix(psi);

    const bool noisy = cfg.noise.family != NoiseFamily::none;
    const int d = basis.dim();
    RunResult out;
    out.fidelity.values.reserve(cfg.steps);
    out.fidelity_noisy.values.reserve(cfg.steps);
    for (int t = 1; t <= cfg.steps; ++t) {
        psi = op.evolution * psi;
        const double f = fidelity_pure(psi, target);
        const double c = coherence_l1(psi);
        out.fidelity.values.push_back(f);
        out.coherence.push_back(c);
        if (!noisy) {
            out.fidelity_noisy.values.push_back(f);
            out.coherence_noisy.push_back(c);
            continue;
        }
        const KrausSet kraus = kraus_at(cfg.noise, t, d);
        if (cfg.noise_mode == NoiseMode::terminal) {
            rho = apply_channel(kraus, psi);
        } else {
            rho = apply_channel(kraus, MatrixXc(op.evolution * rho * op.evolution.adjoint()));
        }
        out.fidelity_noisy.values.push_back(std::clamp(fidelity_with_pure(rho, target), 0.0, 1.0));
        out.coherence_noisy.push_back(coherence_l1(rho));
    }
    out.summary = summarize(out.fidelity_noisy, cfg.peak_threshold);
    out.summary.sender = cfg.sender;
    out.summary.receiver = cfg.receiver;
    out.summary.noise_family = cfg.noise.family;
    return out;
}

std::vector<RunSummary> sweep_placements(const Graph& g, int steps, const NoiseSpec& noise,
                                         ReceiverConvention convention, double peak_threshold) {
    ScenarioConfig cfg;
    cfg.steps = steps;
    cfg.noise = noise;
    cfg.receiver_convention = convention;
    cfg.peak_threshold = peak_threshold;
    std::vector<RunSummary> results;
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        for (Vertex r = 0; r < g.num_vertices(); ++r) {
            if (s == r) continue;
            cfg.sender = s;
            cfg.receiver = r;
            results.push_back(run_scenario(g, cfg).summary);
        }
    }
    auto key = [](const RunSummary& x) { return std::llround(x.average_fidelity * 1e12); };
    std::stable_sort(results.begin(), results.end(), [&](const RunSummary& a, const RunSummary& b) {
        const auto ka = key(a), kb = key(b);
        if (ka != kb) return ka > kb;
        return std::pair(a.sender, a.receiver) < std::pair(b.sender, b.receiver);
    });
    return results;
}

namespace {

std::string fmt_real(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

json summary_to_json(const RunSummary& s) {
    return json{{"sender", s.sender},
                {"receiver", s.receiver},
                {"average_fidelity", s.average_fidelity},
                {"max_fidelity", s.max_fidelity},
                {"argmax_t", s.argmax_t},
                {"peak_times", s.peak_times},
                {"noise_family", std::string(to_string(s.noise_family))}};
}

}  // namespace

void write_csv(std::ostream& out, const RunResult& result) {
    out << "t,fidelity,coherence,fidelity_noisy,coherence_noisy\n";
    for (int t = 1; t <= result.fidelity.horizon(); ++t) {
        const auto i = static_cast<std::size_t>(t - 1);
        out << t << ',' << fmt_real(result.fidelity.values[i]) << ',' << fmt_real(result.coherence[i]) << ','
            << fmt_real(result.fidelity_noisy.values[i]) << ',' << fmt_real(result.coherence_noisy[i]) << '\n';
    }
}

void write_summary_json(std::ostream& out, const RunSummary& summary) {
    out << summary_to_json(summary).dump(2) << '\n';
}

void write_sweep_json(std::ostream& out, const std::vector<RunSummary>& sweep) {
    json arr = json::array();
    for (const auto& s : sweep) arr.push_back(summary_to_json(s));
    out << arr.dump(2) << '\n';
}

void export_run(const RunResult& result, const std::optional<std::string>& csv_path,
                const std::optional<std::string>& json_path) {
    auto open = [](const std::string& path) {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
        return f;
    };
    if (csv_path) {
        auto f = open(*csv_path);
        write_csv(f, result);
        if (!f.flush()) throw std::runtime_error("write failed for '" + *csv_path + "'");
    }
    if (json_path) {
        auto f = open(*json_path);
        write_summary_json(f, result.summary);
        if (!f.flush()) throw std::runtime_error("write failed for '" + *json_path + "'");
    }
}

ScenarioConfig parse_scenario(const std::string& json_text, ScenarioConfig cfg) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError("scenario", e.what());
    }
    if (!doc.is_object()) throw ConfigError("scenario", "top level must be an object");
    for (const auto& [key, value] : doc.items()) {
        try {
            if (key == "seed_path") cfg.seed_path = value.get<int>();
            else if (key == "wings") cfg.wings = value.get<int>();
            else if (key == "graph_file") cfg.graph_file = value.get<std::string>();
            else if (key == "sender") cfg.sender = value.get<int>();
            else if (key == "receiver") cfg.receiver = value.get<int>();
            else if (key == "steps") cfg.steps = value.get<int>();
            else if (key == "noise") cfg.noise.family = parse_noise_family(value.get<std::string>());
            else if (key == "noise_mode") cfg.noise_mode = parse_noise_mode(value.get<std::string>());
            else if (key == "rtn.a") cfg.noise.rtn.a = value.get<double>();
            else if (key == "rtn.gamma") cfg.noise.rtn.gamma = value.get<double>();
            else if (key == "oun.lambda") cfg.noise.oun.lambda = value.get<double>();
            else if (key == "oun.gamma") cfg.noise.oun.gamma = value.get<double>();
            else if (key == "nmad.g") cfg.noise.nmad.g = value.get<double>();
            else if (key == "nmad.gamma") cfg.noise.nmad.gamma = value.get<double>();
            else if (key == "receiver_convention") {
                cfg.receiver_convention = parse_receiver_convention(value.get<std::string>());
            } else if (key == "peak_threshold") cfg.peak_threshold = value.get<double>();
            else if (key == "out_csv") cfg.out_csv = value.get<std::string>();
            else if (key == "out_json") cfg.out_json = value.get<std::string>();
            else throw ConfigError(key, "unknown scenario field");
        } catch (const json::exception& e) {
            throw ConfigError(key, e.what());
        } catch (const std::invalid_argument& e) {
            throw ConfigError(key, e.what());
        }
    }
    return cfg;
}

ScenarioConfig load_scenario(const std::string& path, ScenarioConfig base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("scenario", "cannot open '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_scenario(text.str(), std::move(base));
}

void write_matrix(std::ostream& out, const MatrixXc& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g%+.17gi", m(i, j).real(), m(i, j).imag());
            out << (j ? " " : "") << buf;
        }
        out << '\n';
    }
}

const std::vector<ReferenceRow>& reference_rows() {
    static const std::vector<ReferenceRow> rows = {
        {1, 2, 1, 0, 1, 0.125},   {1, 2, 1, 1, 2, 0.25},    {1, 2, 1, 0, 2, 0.125},
        {2, 2, 3, 0, 1, 0.1698},  {2, 2, 3, 0, 2, 0.0406},  {2, 2, 3, 5, 6, 0.0928},
        {2, 2, 3, 4, 6, 0.0916},  {3, 3, 3, 0, 2, 0.0992},  {3, 3, 3, 0, 3, 0.05775},
        {3, 3, 3, 0, 4, 0.05465}, {3, 3, 3, 4, 6, 0.07215}, {3, 3, 3, 5, 6, 0.1087},
    };
    return rows;
}

std::vector<TableCheck> reproduce_tables(int steps, ReceiverConvention convention) {
    std::map<std::pair<int, int>, Graph> graphs;
    std::vector<TableCheck> checks;
    for (const auto& row : reference_rows()) {
        auto [it, inserted] = graphs.try_emplace({row.seed_path, row.wings});
        if (inserted) it->second = build_butterfly(build_path(row.seed_path), row.wings);
        const Graph& g = it->second;

        ScenarioConfig cfg;
        cfg.sender = row.sender;
        cfg.receiver = row.receiver;
        cfg.steps = steps;
        cfg.receiver_convention = convention;
        const RunResult run = run_scenario(g, cfg);

        const ArcBasis basis(g);
        const double f0 = fidelity_pure(sender_state<Complex>(g, basis, row.sender),
                                        receiver_state<Complex>(g, basis, row.receiver, convention));
        const auto& v = run.fidelity.values;
        double shifted = f0;
        for (int t = 0; t + 1 < steps; ++t) shifted += v[t];

        checks.push_back({row, run.summary.average_fidelity, shifted / steps});
    }
    return checks;
}

}  // namespace qstwalk
