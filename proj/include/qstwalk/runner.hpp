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

#ifndef QSTWALK_RUNNER_HPP_
#define QSTWALK_RUNNER_HPP_

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qstwalk/graph.hpp"
#include "qstwalk/metrics.hpp"
#include "qstwalk/noise.hpp"
#include "qstwalk/walk.hpp"

namespace qstwalk {

/// Invalid scenario configuration. `field()` names the offending setting.
class ConfigError : public std::runtime_error {
  public:
    ConfigError(std::string field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

  private:
    std::string field_;
};

/// How the channel enters the dynamics.
enum class NoiseMode {
    terminal,  // rho_t = sum_i K_i(t) |psi_t><psi_t| K_i(t)^dagger, psi_t noiseless
    per_step,  // rho_t = sum_i K_i(t) U rho_{t-1} U^dagger K_i(t)^dagger
};

std::string_view to_string(NoiseMode mode);
std::string_view to_string(ReceiverConvention convention);
NoiseMode parse_noise_mode(std::string_view name);
ReceiverConvention parse_receiver_convention(std::string_view name);

struct ScenarioConfig {
    // Graph: butterfly over a path seed, or an edge-list file (takes precedence).
    int seed_path = 2;
    int wings = 0;
    std::optional<std::string> graph_file;

    Vertex sender = 0;
    Vertex receiver = 1;
    int steps = 200;
    NoiseSpec noise;
    NoiseMode noise_mode = NoiseMode::terminal;
    ReceiverConvention receiver_convention = ReceiverConvention::outgoing;
    double peak_threshold = 0.8;

    std::optional<std::string> out_csv;
    std::optional<std::string> out_json;
};

struct RunSummary {
    Vertex sender = 0;
    Vertex receiver = 0;
    double average_fidelity = 0.0;
    double max_fidelity = 0.0;
    int argmax_t = 1;             // earliest maximiser
    std::vector<int> peak_times;  // t with F_t >= threshold
    NoiseFamily noise_family = NoiseFamily::none;
};

struct RunResult {
    FidelitySeries fidelity;
    FidelitySeries fidelity_noisy;
    std::vector<double> coherence;
    std::vector<double> coherence_noisy;
    RunSummary summary;  // of the noisy series (identical to noiseless without noise)
};

/// Builds the scenario graph. Throws ConfigError for bad graph settings or an
/// unreadable graph file.
Graph resolve_graph(const ScenarioConfig& cfg);

/// Throws ConfigError naming the first invalid field.
void validate(const ScenarioConfig& cfg, const Graph& g);

RunSummary summarize(const FidelitySeries& series, double peak_threshold);

RunResult run_scenario(const ScenarioConfig& cfg);
RunResult run_scenario(const Graph& g, const ScenarioConfig& cfg);

/// Every ordered (s, r) pair with s != r, best average fidelity first.
/// Averages equal to 12 decimals count as ties and are ordered by (s, r).
std::vector<RunSummary> sweep_placements(const Graph& g, int steps, const NoiseSpec& noise,
                                         ReceiverConvention convention = ReceiverConvention::outgoing,
                                         double peak_threshold = 0.8);

// Export. CSV header: t,fidelity,coherence,fidelity_noisy,coherence_noisy.
void write_csv(std::ostream& out, const RunResult& result);
void write_summary_json(std::ostream& out, const RunSummary& summary);
void write_sweep_json(std::ostream& out, const std::vector<RunSummary>& sweep);
/// Writes whichever paths are set. Throws std::runtime_error naming the path
/// on I/O failure.
void export_run(const RunResult& result, const std::optional<std::string>& csv_path,
                const std::optional<std::string>& json_path);

/// Loads a flat JSON scenario document on top of `base`.
ScenarioConfig load_scenario(const std::string& path, ScenarioConfig base = {});
ScenarioConfig parse_scenario(const std::string& json_text, ScenarioConfig base = {});

/// Plain-text matrix dump, row-major, entries "re+im i".
void write_matrix(std::ostream& out, const MatrixXc& m);

// Published average-fidelity tables for butterfly graphs over path seeds.
struct ReferenceRow {
    int table = 0;
    int seed_path = 0;
    int wings = 0;
    Vertex sender = 0;
    Vertex receiver = 0;
    double expected = 0.0;
};

const std::vector<ReferenceRow>& reference_rows();

struct TableCheck {
    ReferenceRow row;
    double average = 0.0;          // window t = 1..T
    double average_shifted = 0.0;  // window t = 0..T-1
};

std::vector<TableCheck> reproduce_tables(int steps = 200,
                                         ReceiverConvention convention = ReceiverConvention::outgoing);

}  // namespace qstwalk

#endif  // QSTWALK_RUNNER_HPP_
