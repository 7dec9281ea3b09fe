/**
 * @file scenario.hpp
 * @brief JSON-configured runs: simulate, sweep and re-analyze stored runs.
 *
 * A scenario file looks like
 *
 *   {
 *     "schema": 1,
 *     "name": "pseirs_p1",
 *     "model": "pseirs",
 *     "params": {"beta": 0.33, "mu": 0.006, "epsilon": 0.06, "alpha": 0.04,
 *                "gamma": 0.308, "omega": 0.15, "tau": 30, "p": 1},
 *     "history": {"type": "constant", "S": 63, "E": 0, "I": 7, "R": 0},
 *     "horizon": 300,
 *     "analyses": {"stats": true, "threshold": true,
 *                  "classify": {"tail_fraction": 0.1},
 *                  "equivalence": {"checkpoints": 20},
 *                  "phase_plane": [{"axes": ["S", "E", "I"], "proportions": true}]}
 *   }
 *
 * SIR scenarios use "model": "sir", params {beta, alpha} and
 * "initial": {"S", "I", "R"}. Unknown keys are rejected.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pseirs/csv.hpp"
#include "pseirs/dde.hpp"
#include "pseirs/history.hpp"
#include "pseirs/integro.hpp"
#include "pseirs/model.hpp"
#include "pseirs/netgen.hpp"
#include "pseirs/sir.hpp"
#include "pseirs/stats.hpp"
#include "pseirs/threshold.hpp"
#include "pseirs/trajectory.hpp"

namespace pseirs::scenario {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct NetworkBlock {
  std::size_t n = 0;
  std::size_t m0 = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  double per_contact_prob = 0.0;
};

struct PhasePlaneRequest {
  std::vector<Compartment> axes;
  bool proportions = false;
  std::optional<stats::Window> window;
};

struct Analyses {
  bool stats = false;
  std::optional<stats::Window> stats_window;
  std::vector<PhasePlaneRequest> phase_planes;
  std::optional<std::size_t> equivalence_checkpoints;
  bool threshold = false;
  std::optional<double> classify_tail;
};

struct ScenarioConfig {
  Json source;  // the document as read, echoed into summaries
  std::string name;
  ModelKind model = ModelKind::Pseirs;
  SirParams sir;
  SirState sir_initial;
  PseirsParams pseirs;  // gamma already replaced when a network block is present
  HistoryFunction history;
  dde::InitOverride init_override;
  double horizon = 0.0;
  double step = 0.0;  // resolved: explicit value or the model default
  Analyses analyses;
  std::optional<NetworkBlock> network;
  std::optional<netgen::Graph> graph;  // generated from the network block
};

/** @brief Command-line overrides applied on top of a config document. */
struct Overrides {
  std::optional<double> step;
  std::optional<double> horizon;
  std::optional<std::uint64_t> seed;
};

/** @throws Error(ConfigError) or InvalidParameter; never touches the filesystem. */
[[nodiscard]] ScenarioConfig parse_config(const Json& doc);

/** @throws Error(IoError) if the file cannot be read, plus parse_config errors. */
[[nodiscard]] Json load_json(const std::filesystem::path& path);

/** @brief Copy of doc with the overrides written into it. */
[[nodiscard]] Json apply_overrides(Json doc, const Overrides& overrides);

struct NetworkSummary {
  std::size_t n = 0;
  std::size_t edges = 0;
  double mean_degree = 0.0;
  std::optional<double> powerlaw_exponent;
  double gamma = 0.0;
};

struct ThresholdSummary {
  std::optional<double> r0_sir;
  std::optional<sir::SirPrediction> sir_endemic;  // only when beta / alpha > 1
  std::optional<sir::SirPrediction> sir_disease_free;
  std::optional<double> r0_fraction;
  std::optional<double> r0_consistent;
  std::optional<threshold::ProbeResult> probe;
};

struct RunSummary {
  Json config;
  Json overrides;  // null when none were given
  std::string name;
  ModelKind model = ModelKind::Pseirs;
  std::optional<ThresholdSummary> threshold;
  std::optional<threshold::EquilibriumClass> classification;
  std::optional<stats::StatsTable> stats;
  std::optional<integro::EquivalenceReport> equivalence;
  std::optional<NetworkSummary> network;
  std::vector<std::string> phase_plane_files;
  double wall_seconds = 0.0;

  /** @brief Summary document; wall-clock time only when asked, to keep files reproducible. */
  [[nodiscard]] Json to_json(bool include_timing = false) const;
};

struct RunResult {
  RunSummary summary;
  Trajectory trajectory;
  std::vector<stats::PhasePlaneSeries> phase_planes;
};

/** @brief Simulate and analyze in memory. */
[[nodiscard]] RunResult execute(const ScenarioConfig& config);

/** @brief Analyze an existing trajectory (derivatives are rebuilt from the model). */
[[nodiscard]] RunResult analyze(const ScenarioConfig& config, const csv::TrajectorySamples& samples);

/**
 * @brief Write trajectory.csv, summary.json, phase_*.csv and, with a network
 *        block, network_edges.txt / network.json into out_dir.
 */
void write_outputs(const RunResult& result, const std::filesystem::path& out_dir,
                   bool include_timing = false, bool include_trajectory = true);

/**
 * @brief execute() followed by write_outputs(). Nothing is written if the run fails.
 *
 * overrides is recorded verbatim in the summary (null for none).
 */
RunSummary run_scenario(const ScenarioConfig& config, const std::filesystem::path& out_dir,
                        bool include_timing = false, const Json& overrides = nullptr);

struct SweepEntry {
  double value = 0.0;
  std::string directory;
  std::optional<RunSummary> summary;
  std::optional<Json> error;
};

/** @brief "p" -> "/params/p", "horizon" -> "/horizon"; a leading '/' is taken as a JSON pointer. */
[[nodiscard]] std::string parameter_pointer(const Json& doc, const std::string& parameter);

/**
 * @brief One independent run per value, written to out_dir/<index>_<param>_<value>/.
 *
 * Runs may execute concurrently; entries come back in input order. A failing
 * run records its error and the sweep continues.
 */
[[nodiscard]] std::vector<SweepEntry> sweep(const Json& base, const std::string& parameter,
                                            const std::vector<double>& values,
                                            const std::filesystem::path& out_dir,
                                            unsigned threads = 0);

[[nodiscard]] Json sweep_to_json(const std::string& parameter,
                                 const std::vector<SweepEntry>& entries);

/** @brief {"error": {"kind", "message", ...}} for any exception. */
[[nodiscard]] Json error_record(const std::exception& e);

/** @brief Process exit status for an exception: 2 config, 3 solver, 4 I/O, 1 other. */
[[nodiscard]] int exit_code_for(const std::exception& e) noexcept;

/** @brief Text stored with every pSEIRS threshold block. */
[[nodiscard]] std::string_view threshold_note() noexcept;

}  // namespace pseirs::scenario
