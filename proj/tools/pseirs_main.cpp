// Command-line front end: simulate, sweep, generate-network, analyze.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pseirs/csv.hpp"
#include "pseirs/error.hpp"
#include "pseirs/netgen.hpp"
#include "pseirs/scenario.hpp"

namespace fs = std::filesystem;
using pseirs::scenario::Json;

namespace {

struct CommonFlags {
  std::string config;
  std::string out;
  std::optional<double> step;
  std::optional<double> horizon;
  std::optional<std::uint64_t> seed;
  bool timing = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config, "Scenario JSON file")->required();
  cmd->add_option("--out", flags.out, "Output directory")->required();
  cmd->add_option("--step", flags.step, "Override the integration step");
  cmd->add_option("--horizon", flags.horizon, "Override the horizon");
  cmd->add_option("--seed", flags.seed, "Override the network seed");
  cmd->add_flag("--timing", flags.timing, "Record wall-clock time in summary.json");
}

// The summary echoes the file as written; overrides are listed beside it.
pseirs::scenario::ScenarioConfig load(const CommonFlags& flags) {
  const Json doc = pseirs::scenario::load_json(flags.config);
  auto config = pseirs::scenario::parse_config(
      pseirs::scenario::apply_overrides(doc, {flags.step, flags.horizon, flags.seed}));
  config.source = doc;
  return config;
}

Json overrides_json(const CommonFlags& flags) {
  Json o = Json::object();
  if (flags.step) o["step"] = *flags.step;
  if (flags.horizon) o["horizon"] = *flags.horizon;
  if (flags.seed) o["seed"] = *flags.seed;
  return o.empty() ? Json(nullptr) : o;
}

std::vector<double> parse_values(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos) {
      throw pseirs::Error(pseirs::ErrorKind::ConfigError, "--values: not a number: '" + item + "'");
    }
    values.push_back(v);
  }
  return values;
}

int cmd_simulate(const CommonFlags& flags) {
  const auto config = load(flags);
  const auto summary =
      pseirs::scenario::run_scenario(config, flags.out, flags.timing, overrides_json(flags));
  std::cout << "wrote " << (fs::path(flags.out) / "summary.json").string() << '\n';
  if (summary.threshold && summary.threshold->r0_fraction) {
    std::cout << "r0_fraction " << pseirs::csv::format_number(*summary.threshold->r0_fraction)
              << "  r0_consistent "
              << pseirs::csv::format_number(*summary.threshold->r0_consistent) << '\n';
  }
  return 0;
}

int cmd_sweep(const CommonFlags& flags, const std::string& param, const std::string& values_text,
              unsigned threads) {
  const auto values = parse_values(values_text);
  const Json doc = pseirs::scenario::apply_overrides(pseirs::scenario::load_json(flags.config),
                                                     {flags.step, flags.horizon, flags.seed});
  (void)pseirs::scenario::parse_config(doc);
  const auto entries = pseirs::scenario::sweep(doc, param, values, flags.out, threads);
  std::size_t failed = 0;
  for (const auto& e : entries) {
    std::cout << e.directory << ": " << (e.error ? (*e.error)["error"]["kind"].get<std::string>()
                                                 : std::string("ok"))
              << '\n';
    failed += e.error ? 1 : 0;
  }
  std::cout << entries.size() << " runs, " << failed << " failed\n";
  return 0;
}

int cmd_generate_network(std::size_t n, std::size_t m0, std::size_t m, std::uint64_t seed,
                         const std::string& out) {
  const auto graph = pseirs::netgen::generate_ba(n, m0, m, seed);
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec) throw pseirs::Error(pseirs::ErrorKind::IoError, "cannot create " + out + ": " + ec.message());

  std::ofstream edges(fs::path(out) / "network_edges.txt", std::ios::binary | std::ios::trunc);
  pseirs::netgen::write_edge_list(edges, graph);
  std::ofstream json(fs::path(out) / "network.json", std::ios::binary | std::ios::trunc);
  json << pseirs::netgen::to_json(graph);
  if (!edges || !json) throw pseirs::Error(pseirs::ErrorKind::IoError, "failed writing into " + out);

  std::cout << "nodes " << graph.n << "\nedges " << graph.edges.size() << "\nmean_degree "
            << pseirs::csv::format_number(pseirs::netgen::mean_degree(graph)) << '\n';
  try {
    const double exponent =
        pseirs::netgen::powerlaw_exponent(pseirs::netgen::degree_histogram(graph), m);
    std::cout << "powerlaw_exponent " << pseirs::csv::format_number(exponent) << '\n';
  } catch (const pseirs::Error& e) {
    if (e.kind() != pseirs::ErrorKind::InsufficientTail) throw;
    std::cout << "powerlaw_exponent null\n";
  }
  return 0;
}

int cmd_analyze(const CommonFlags& flags, const std::string& trajectory) {
  const auto config = load(flags);
  std::ifstream in(trajectory, std::ios::binary);
  if (!in) throw pseirs::Error(pseirs::ErrorKind::IoError, "cannot open " + trajectory);
  const auto samples = pseirs::csv::read_trajectory(in);
  auto result = pseirs::scenario::analyze(config, samples);
  result.summary.overrides = overrides_json(flags);
  pseirs::scenario::write_outputs(result, flags.out, flags.timing, false);
  std::cout << "wrote " << (fs::path(flags.out) / "summary.json").string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pSEIRS and SIR epidemic simulator"};
  app.require_subcommand(1);

  CommonFlags sim_flags;
  auto* simulate = app.add_subcommand("simulate", "Run one scenario");
  add_common(simulate, sim_flags);

  CommonFlags sweep_flags;
  std::string sweep_param;
  std::string sweep_values;
  unsigned sweep_threads = 0;
  auto* sweep = app.add_subcommand("sweep", "Run one scenario per parameter value");
  add_common(sweep, sweep_flags);
  sweep->add_option("--param", sweep_param, "Parameter name or JSON pointer")->required();
  sweep->add_option("--values", sweep_values, "Comma-separated values (may be empty)")->required();
  sweep->add_option("--threads", sweep_threads, "Worker threads (0 = hardware)");

  std::size_t net_n = 0;
  std::size_t net_m0 = 0;
  std::size_t net_m = 0;
  std::uint64_t net_seed = 0;
  std::string net_out;
  auto* generate = app.add_subcommand("generate-network", "Barabasi-Albert graph to files");
  generate->add_option("--n", net_n, "Node count")->required();
  generate->add_option("--m0", net_m0, "Seed clique size")->required();
  generate->add_option("--m", net_m, "Edges per new node")->required();
  generate->add_option("--seed", net_seed, "RNG seed")->required();
  generate->add_option("--out", net_out, "Output directory")->required();

  CommonFlags an_flags;
  std::string an_trajectory;
  auto* analyze = app.add_subcommand("analyze", "Re-run analyses on a stored trajectory CSV");
  add_common(analyze, an_flags);
  analyze->add_option("--trajectory", an_trajectory, "trajectory.csv from a previous run")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*simulate) return cmd_simulate(sim_flags);
    if (*sweep) return cmd_sweep(sweep_flags, sweep_param, sweep_values, sweep_threads);
    if (*generate) return cmd_generate_network(net_n, net_m0, net_m, net_seed, net_out);
    if (*analyze) return cmd_analyze(an_flags, an_trajectory);
  } catch (const std::exception& e) {
    std::cerr << pseirs::scenario::error_record(e).dump() << '\n';
    return pseirs::scenario::exit_code_for(e);
  }
  return 1;
}
