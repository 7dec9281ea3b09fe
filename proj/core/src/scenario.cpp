#include "pseirs/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "pseirs/error.hpp"

namespace pseirs::scenario {

namespace {

[[noreturn]] void config_error(const std::string& message) {
  throw Error(ErrorKind::ConfigError, message);
}

void allow_only(const Json& obj, const std::string& where, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) config_error(where + " must be an object");
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) config_error("unknown key '" + key + "' in " + where);
  }
}

double number(const Json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) config_error(where + "." + key + " is required");
  if (!it->is_number()) config_error(where + "." + key + " must be a number");
  return it->get<double>();
}

double number_or(const Json& obj, const char* key, double fallback, const std::string& where) {
  return obj.contains(key) ? number(obj, key, where) : fallback;
}

std::uint64_t unsigned_int(const Json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) config_error(where + "." + key + " is required");
  if (!it->is_number_unsigned()) config_error(where + "." + key + " must be a non-negative integer");
  return it->get<std::uint64_t>();
}

std::optional<stats::Window> parse_window(const Json& obj, const std::string& where) {
  const auto it = obj.find("window");
  if (it == obj.end()) return std::nullopt;
  if (!it->is_array() || it->size() != 2 || !(*it)[0].is_number() || !(*it)[1].is_number()) {
    config_error(where + ".window must be [from, to]");
  }
  stats::Window w{(*it)[0].get<double>(), (*it)[1].get<double>()};
  if (!(w.from <= w.to)) config_error(where + ".window must satisfy from <= to");
  return w;
}

HistoryFunction parse_history(const Json& h) {
  const auto type = h.value("type", std::string("constant"));
  if (type == "constant") {
    allow_only(h, "history", {"type", "S", "E", "I", "R"});
    const CompartmentState x{number(h, "S", "history"), number_or(h, "E", 0.0, "history"),
                             number(h, "I", "history"), number_or(h, "R", 0.0, "history")};
    if (x.s < 0.0 || x.e < 0.0 || x.i < 0.0 || x.r < 0.0) {
      throw InvalidParameter("history", std::min({x.s, x.e, x.i, x.r}), "S, E, I, R >= 0");
    }
    return HistoryFunction(ConstantHistory{x});
  }
  if (type == "sampled") {
    allow_only(h, "history", {"type", "times", "states"});
    SampledHistory sampled;
    const auto& times = h.at("times");
    const auto& states = h.at("states");
    if (!times.is_array() || !states.is_array()) config_error("history.times/states must be arrays");
    for (const auto& t : times) sampled.times.push_back(t.get<double>());
    for (const auto& row : states) {
      if (!row.is_array() || row.size() != 4) config_error("history.states rows are [S, E, I, R]");
      sampled.states.push_back(
          {row[0].get<double>(), row[1].get<double>(), row[2].get<double>(), row[3].get<double>()});
    }
    return HistoryFunction(std::move(sampled));
  }
  config_error("history.type must be 'constant' or 'sampled'");
}

Analyses parse_analyses(const Json& a, ModelKind model) {
  allow_only(a, "analyses", {"stats", "phase_plane", "equivalence", "threshold", "classify"});
  Analyses out;
  if (const auto it = a.find("stats"); it != a.end()) {
    if (it->is_boolean()) {
      out.stats = it->get<bool>();
    } else {
      allow_only(*it, "analyses.stats", {"window"});
      out.stats = true;
      out.stats_window = parse_window(*it, "analyses.stats");
    }
  }
  if (const auto it = a.find("phase_plane"); it != a.end()) {
    if (!it->is_array()) config_error("analyses.phase_plane must be an array");
    for (const auto& req : *it) {
      allow_only(req, "analyses.phase_plane[]", {"axes", "proportions", "window"});
      PhasePlaneRequest pp;
      for (const auto& axis : req.at("axes")) {
        const auto c = parse_compartment(axis.get<std::string>());
        if (!c || *c == Compartment::N || (model == ModelKind::Sir && *c == Compartment::E)) {
          config_error("invalid phase-plane axis " + axis.dump());
        }
        pp.axes.push_back(*c);
      }
      if (pp.axes.size() < 2 || pp.axes.size() > 3) config_error("phase_plane needs 2 or 3 axes");
      pp.proportions = req.value("proportions", false);
      pp.window = parse_window(req, "analyses.phase_plane[]");
      out.phase_planes.push_back(std::move(pp));
    }
  }
  if (const auto it = a.find("equivalence"); it != a.end()) {
    if (model != ModelKind::Pseirs) config_error("equivalence analysis requires model 'pseirs'");
    if (it->is_boolean()) {
      if (it->get<bool>()) out.equivalence_checkpoints = 20;
    } else {
      allow_only(*it, "analyses.equivalence", {"checkpoints"});
      const auto n = unsigned_int(*it, "checkpoints", "analyses.equivalence");
      if (n == 0) config_error("analyses.equivalence.checkpoints must be >= 1");
      out.equivalence_checkpoints = n;
    }
  }
  if (const auto it = a.find("threshold"); it != a.end()) out.threshold = it->get<bool>();
  if (const auto it = a.find("classify"); it != a.end()) {
    if (it->is_boolean()) {
      if (it->get<bool>()) out.classify_tail = 0.1;
    } else {
      allow_only(*it, "analyses.classify", {"tail_fraction"});
      const double tail = number(*it, "tail_fraction", "analyses.classify");
      if (!(tail > 0.0 && tail <= 0.5)) {
        throw InvalidParameter("tail_fraction", tail, "0 < tail_fraction <= 0.5");
      }
      out.classify_tail = tail;
    }
  }
  return out;
}

Json prediction_json(const sir::SirPrediction& p) {
  return Json{{"S", p.s_inf}, {"I", p.i_inf}, {"R", p.r_inf}};
}

std::string phase_file_name(std::size_t index, const stats::PhasePlaneSeries& series) {
  std::string name = "phase_" + std::to_string(index);
  for (const auto& label : series.labels) name += "_" + label;
  return name + ".csv";
}

void analyze_into(const ScenarioConfig& config, RunResult& result) {
  const Trajectory& traj = result.trajectory;
  RunSummary& summary = result.summary;
  const Analyses& a = config.analyses;

  if (a.threshold) {
    ThresholdSummary t;
    if (config.model == ModelKind::Sir) {
      t.r0_sir = sir::r0(config.sir);
      const double n = config.sir_initial.n();
      t.sir_disease_free = sir::disease_free_prediction(n);
      if (*t.r0_sir > 1.0) t.sir_endemic = sir::endemic_prediction(config.sir, n);
    } else {
      t.r0_fraction = threshold::r0_fraction(config.pseirs);
      t.r0_consistent = threshold::r0_consistent(config.pseirs);
      const double horizon =
          std::max(config.horizon, threshold::min_probe_horizon(config.pseirs));
      t.probe = threshold::stability_probe(config.pseirs, horizon);
    }
    summary.threshold = t;
  }
  if (a.classify_tail) {
    summary.classification = threshold::classify_equilibrium(traj, *a.classify_tail);
  }
  if (a.stats) {
    summary.stats = stats::compartment_stats(traj, a.stats_window.value_or(stats::full_window(traj)));
  }
  if (a.equivalence_checkpoints) {
    summary.equivalence = integro::verify_equivalence(traj, config.pseirs, *a.equivalence_checkpoints);
  }
  for (std::size_t j = 0; j < a.phase_planes.size(); ++j) {
    const auto& req = a.phase_planes[j];
    auto series = stats::phase_plane(traj, req.axes, req.window.value_or(stats::full_window(traj)),
                                     req.proportions);
    summary.phase_plane_files.push_back(phase_file_name(j, series));
    result.phase_planes.push_back(std::move(series));
  }
  if (config.graph) {
    NetworkSummary ns;
    ns.n = config.graph->n;
    ns.edges = config.graph->edges.size();
    ns.mean_degree = netgen::mean_degree(*config.graph);
    ns.gamma = config.pseirs.gamma;
    try {
      ns.powerlaw_exponent =
          netgen::powerlaw_exponent(netgen::degree_histogram(*config.graph), config.graph->m);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InsufficientTail) throw;
    }
    summary.network = ns;
  }
}

RunSummary summary_header(const ScenarioConfig& config) {
  RunSummary s;
  s.config = config.source;
  s.name = config.name;
  s.model = config.model;
  return s;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
  out << text;
  out.close();
  if (!out) throw Error(ErrorKind::IoError, "failed writing " + path.string());
}

std::string sanitize(const std::string& text) {
  std::string out;
  for (const char c : text) {
    out += (std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-') ? c : '_';
  }
  while (!out.empty() && out.front() == '_') out.erase(out.begin());
  return out;
}

}  // namespace

std::string_view threshold_note() noexcept {
  return "r0_fraction = gamma*exp(-beta*omega)/(epsilon+beta+alpha) is the closed-form threshold as "
         "commonly quoted for this model; it decides whether the infected fraction I/N grows. "
         "r0_consistent = gamma*exp(-mu*omega)/(mu+epsilon+alpha) decides whether the absolute "
         "infected count grows. Neither formula reproduces the reported threshold values 7.77 "
         "(omega=0.15), 0.3703 (omega=30) or 0.8621 (5000-node run) from the stated parameters; "
         "those values are not reproducible.";
}

ScenarioConfig parse_config(const Json& doc) {
  try {
    allow_only(doc, "config",
               {"schema", "name", "description", "model", "params", "initial", "history",
                "initial_override", "horizon", "step", "analyses", "network"});
    if (!doc.contains("schema") || doc.at("schema") != kSchemaVersion) {
      config_error("config.schema must be " + std::to_string(kSchemaVersion));
    }

    ScenarioConfig c;
    c.source = doc;
    c.name = doc.value("name", std::string("scenario"));
    const auto model = doc.value("model", std::string());
    if (model == "sir") {
      c.model = ModelKind::Sir;
    } else if (model == "pseirs") {
      c.model = ModelKind::Pseirs;
    } else {
      config_error("config.model must be 'sir' or 'pseirs'");
    }

    if (!doc.contains("params")) config_error("config.params is required");
    const Json& params = doc.at("params");
    if (c.model == ModelKind::Sir) {
      allow_only(params, "params", {"beta", "alpha"});
      c.sir = {number(params, "beta", "params"), number(params, "alpha", "params")};
      validate_sir(c.sir);
      if (!doc.contains("initial")) config_error("config.initial is required for model 'sir'");
      const Json& init = doc.at("initial");
      allow_only(init, "initial", {"S", "I", "R"});
      c.sir_initial = {number(init, "S", "initial"), number(init, "I", "initial"),
                       number_or(init, "R", 0.0, "initial")};
      if (c.sir_initial.s < 0.0 || c.sir_initial.i < 0.0 || c.sir_initial.r < 0.0) {
        throw InvalidParameter("initial", std::min({c.sir_initial.s, c.sir_initial.i,
                                                    c.sir_initial.r}), "S, I, R >= 0");
      }
      c.history = HistoryFunction(ConstantHistory{{c.sir_initial.s, 0.0, c.sir_initial.i,
                                                   c.sir_initial.r}});
      for (const char* key : {"history", "initial_override", "network"}) {
        if (doc.contains(key)) config_error(std::string("config.") + key + " requires model 'pseirs'");
      }
    } else {
      allow_only(params, "params", {"beta", "mu", "epsilon", "alpha", "gamma", "omega", "tau", "p"});
      c.network.reset();
      if (const auto it = doc.find("network"); it != doc.end()) {
        allow_only(*it, "network", {"n", "m0", "m", "seed", "per_contact_prob"});
        c.network = NetworkBlock{unsigned_int(*it, "n", "network"), unsigned_int(*it, "m0", "network"),
                                 unsigned_int(*it, "m", "network"),
                                 unsigned_int(*it, "seed", "network"),
                                 number(*it, "per_contact_prob", "network")};
      }
      PseirsParams& p = c.pseirs;
      p.beta = number(params, "beta", "params");
      p.mu = number(params, "mu", "params");
      p.epsilon = number(params, "epsilon", "params");
      p.alpha = number(params, "alpha", "params");
      p.omega = number(params, "omega", "params");
      p.tau = number(params, "tau", "params");
      p.p = number(params, "p", "params");
      if (c.network) {
        if (params.contains("gamma")) config_error("params.gamma conflicts with the network block");
        const auto& nb = *c.network;
        c.graph = netgen::generate_ba(nb.n, nb.m0, nb.m, nb.seed);
        p.gamma = netgen::gamma_from_graph(*c.graph, nb.per_contact_prob);
      } else {
        p.gamma = number(params, "gamma", "params");
      }
      (void)validate_pseirs(p);

      if (!doc.contains("history")) config_error("config.history is required for model 'pseirs'");
      c.history = parse_history(doc.at("history"));
      if (!c.history.covers(kappa(p))) {
        throw InvalidParameter("history", c.history.lower_bound(), "history covers [-kappa, 0]");
      }
      if (const auto it = doc.find("initial_override"); it != doc.end()) {
        allow_only(*it, "initial_override", {"E", "R"});
        if (it->contains("E")) c.init_override.exposed = number(*it, "E", "initial_override");
        if (it->contains("R")) c.init_override.recovered = number(*it, "R", "initial_override");
      }
      if (doc.contains("initial")) config_error("config.initial is for model 'sir'; use history");
    }

    c.horizon = number(doc, "horizon", "config");
    if (!(c.horizon > 0.0)) throw InvalidParameter("horizon", c.horizon, "horizon > 0");
    const double default_step = c.model == ModelKind::Sir ? 0.01 : dde::default_step(c.pseirs);
    c.step = number_or(doc, "step", default_step, "config");
    if (!(c.step > 0.0 && c.step <= c.horizon)) {
      throw InvalidParameter("step", c.step, "0 < step <= horizon");
    }
    if (c.model == ModelKind::Pseirs &&
        c.step > std::min(c.pseirs.omega, c.pseirs.tau) / 4.0) {
      throw InvalidParameter("step", c.step, "step <= min(omega, tau) / 4");
    }
    if (const auto it = doc.find("analyses"); it != doc.end()) {
      c.analyses = parse_analyses(*it, c.model);
    }
    return c;
  } catch (const Json::exception& e) {
    config_error(std::string("malformed config: ") + e.what());
  }
}

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    config_error(path.string() + ": " + e.what());
  }
}

Json apply_overrides(Json doc, const Overrides& overrides) {
  if (overrides.step) doc["step"] = *overrides.step;
  if (overrides.horizon) doc["horizon"] = *overrides.horizon;
  if (overrides.seed) {
    if (!doc.contains("network")) config_error("--seed requires a network block in the config");
    doc["network"]["seed"] = *overrides.seed;
  }
  return doc;
}

Json RunSummary::to_json(bool include_timing) const {
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["name"] = name;
  doc["model"] = model == ModelKind::Sir ? "sir" : "pseirs";
  doc["config"] = config;
  if (!overrides.is_null()) doc["overrides"] = overrides;

  if (threshold) {
    Json t;
    if (threshold->r0_sir) {
      t["r0"] = *threshold->r0_sir;
      t["disease_free_prediction"] = prediction_json(*threshold->sir_disease_free);
      t["endemic_prediction"] =
          threshold->sir_endemic ? prediction_json(*threshold->sir_endemic) : Json(nullptr);
    } else {
      t["r0_fraction"] = *threshold->r0_fraction;
      t["r0_consistent"] = *threshold->r0_consistent;
      t["probe"] = {{"verdict", threshold::to_string(threshold->probe->verdict)},
                    {"rate", threshold->probe->rate}};
      t["note"] = threshold_note();
    }
    doc["threshold"] = std::move(t);
  }
  if (classification) {
    const auto& p = classification->point;
    doc["classification"] = {{"kind", threshold::to_string(classification->kind)},
                             {"tail_mean_proportions",
                              {{"s", p.s}, {"e", p.e}, {"i", p.i}, {"r", p.r}}}};
  }
  if (stats) {
    Json s;
    s["window"] = {stats->window.from, stats->window.to};
    s["samples"] = stats->samples;
    for (const auto& row : stats->rows) {
      s[std::string(to_string(row.compartment))] = {
          {"min", row.min}, {"max", row.max}, {"mean", row.mean}};
    }
    doc["stats"] = std::move(s);
  }
  if (equivalence) {
    doc["equivalence"] = {{"checkpoints", equivalence->times.size()},
                       {"max_residual", equivalence->max_residual},
                       {"consistent_init", equivalence->consistent_init}};
  }
  if (network) {
    doc["network"] = {{"n", network->n},
                      {"edges", network->edges},
                      {"mean_degree", network->mean_degree},
                      {"powerlaw_exponent", network->powerlaw_exponent
                                                ? Json(*network->powerlaw_exponent)
                                                : Json(nullptr)},
                      {"gamma", network->gamma}};
  }
  if (!phase_plane_files.empty()) doc["phase_plane_files"] = phase_plane_files;
  if (include_timing) doc["wall_seconds"] = wall_seconds;
  return doc;
}

RunResult execute(const ScenarioConfig& config) {
  const auto started = std::chrono::steady_clock::now();
  Trajectory traj =
      config.model == ModelKind::Sir
          ? sir::simulate(config.sir, config.sir_initial, config.horizon, config.step)
          : dde::simulate(validate_pseirs(config.pseirs), config.history, config.horizon,
                          config.step, config.init_override);
  RunResult result{summary_header(config), std::move(traj), {}};
  analyze_into(config, result);
  result.summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

RunResult analyze(const ScenarioConfig& config, const csv::TrajectorySamples& samples) {
  const auto started = std::chrono::steady_clock::now();
  if (samples.kind != config.model) config_error("trajectory file does not match config model");
  std::vector<CompartmentRates> zeros(samples.states.size());
  const double lag_span = config.model == ModelKind::Sir ? 0.0 : kappa(config.pseirs);
  Trajectory raw(config.model, samples.step, lag_span, config.history, samples.states,
                 std::move(zeros), config.init_override.any());
  Trajectory traj = config.model == ModelKind::Sir
                        ? sir::with_model_derivatives(raw, config.sir)
                        : dde::with_model_derivatives(raw, validate_pseirs(config.pseirs));
  RunResult result{summary_header(config), std::move(traj), {}};
  analyze_into(config, result);
  result.summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

void write_outputs(const RunResult& result, const std::filesystem::path& out_dir,
                   bool include_timing, bool include_trajectory) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorKind::IoError, "cannot create " + out_dir.string() + ": " + ec.message());

  if (include_trajectory) {
    std::ostringstream traj;
    csv::write_trajectory(traj, result.trajectory);
    write_text(out_dir / "trajectory.csv", traj.str());
  }
  for (std::size_t j = 0; j < result.phase_planes.size(); ++j) {
    std::ostringstream pp;
    csv::write_phase_plane(pp, result.phase_planes[j]);
    write_text(out_dir / result.summary.phase_plane_files[j], pp.str());
  }
  write_text(out_dir / "summary.json", result.summary.to_json(include_timing).dump(2) + "\n");
}

RunSummary run_scenario(const ScenarioConfig& config, const std::filesystem::path& out_dir,
                        bool include_timing, const Json& overrides) {
  RunResult result = execute(config);
  result.summary.overrides = overrides;
  write_outputs(result, out_dir, include_timing);
  if (config.graph) {
    std::ostringstream edges;
    netgen::write_edge_list(edges, *config.graph);
    write_text(out_dir / "network_edges.txt", edges.str());
    write_text(out_dir / "network.json", netgen::to_json(*config.graph));
  }
  return std::move(result.summary);
}

std::string parameter_pointer(const Json& doc, const std::string& parameter) {
  if (!parameter.empty() && parameter.front() == '/') return parameter;
  if (doc.contains("params") && doc["params"].contains(parameter)) return "/params/" + parameter;
  if (doc.contains(parameter)) return "/" + parameter;
  config_error("sweep parameter '" + parameter + "' is not a field of the config");
}

std::vector<SweepEntry> sweep(const Json& base, const std::string& parameter,
                              const std::vector<double>& values,
                              const std::filesystem::path& out_dir, unsigned threads) {
  const Json::json_pointer pointer(parameter_pointer(base, parameter));
  if (!base.contains(pointer) || !base.at(pointer).is_number()) {
    config_error("sweep parameter '" + parameter + "' must name a numeric field");
  }

  std::vector<SweepEntry> entries(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    std::ostringstream dir;
    dir << (j < 10 ? "0" : "") << j << '_' << sanitize(parameter) << '_'
        << csv::format_number(values[j]);
    entries[j].value = values[j];
    entries[j].directory = dir.str();
  }

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t j = next++; j < entries.size(); j = next++) {
      SweepEntry& entry = entries[j];
      try {
        Json doc = base;
        doc[pointer] = entry.value;
        const ScenarioConfig config = parse_config(doc);
        entry.summary = run_scenario(
            config, out_dir / entry.directory, false,
            Json{{"sweep", {{"parameter", pointer.to_string()}, {"value", entry.value}}}});
      } catch (const std::exception& e) {
        entry.error = error_record(e);
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, values.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorKind::IoError, "cannot create " + out_dir.string() + ": " + ec.message());
  write_text(out_dir / "sweep.json", sweep_to_json(parameter, entries).dump(2) + "\n");
  return entries;
}

Json sweep_to_json(const std::string& parameter, const std::vector<SweepEntry>& entries) {
  Json runs = Json::array();
  for (const auto& entry : entries) {
    Json run{{"value", entry.value}, {"directory", entry.directory}};
    if (entry.summary) run["summary"] = entry.summary->to_json();
    if (entry.error) run.update(*entry.error);
    runs.push_back(std::move(run));
  }
  return Json{{"schema", kSchemaVersion}, {"parameter", parameter}, {"runs", std::move(runs)}};
}

Json error_record(const std::exception& e) {
  Json err;
  if (const auto* ip = dynamic_cast<const InvalidParameter*>(&e)) {
    err = {{"kind", to_string(ip->kind())},
           {"message", ip->what()},
           {"name", ip->name()},
           {"value", ip->value()},
           {"constraint", ip->constraint()}};
  } else if (const auto* pe = dynamic_cast<const Error*>(&e)) {
    err = {{"kind", to_string(pe->kind())}, {"message", pe->what()}};
  } else if (dynamic_cast<const std::filesystem::filesystem_error*>(&e) != nullptr) {
    err = {{"kind", to_string(ErrorKind::IoError)}, {"message", e.what()}};
  } else if (dynamic_cast<const Json::exception*>(&e) != nullptr) {
    err = {{"kind", to_string(ErrorKind::ConfigError)}, {"message", e.what()}};
  } else {
    err = {{"kind", "Internal"}, {"message", e.what()}};
  }
  return Json{{"error", std::move(err)}};
}

int exit_code_for(const std::exception& e) noexcept {
  if (dynamic_cast<const std::filesystem::filesystem_error*>(&e) != nullptr) return 4;
  if (dynamic_cast<const Json::exception*>(&e) != nullptr) return 2;
  const auto* pe = dynamic_cast<const Error*>(&e);
  if (pe == nullptr) return 1;
  switch (pe->kind()) {
    case ErrorKind::InvalidParameter:
    case ErrorKind::ConfigError:
    case ErrorKind::InvalidGraphParams:
      return 2;
    case ErrorKind::IoError:
      return 4;
    default:
      return 3;
  }
}

}  // namespace pseirs::scenario
