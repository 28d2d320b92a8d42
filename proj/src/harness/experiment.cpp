#include "hperc/harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <thread>

#include <fmt/format.h>

#include "hperc/core/error.hpp"
#include "hperc/core/rng.hpp"

namespace hperc {

namespace {

[[noreturn]] void config_error(const std::string& msg) { throw Error(ErrorCode::Config, msg); }

template <class T>
T get_as(const nlohmann::json& j, const std::string& key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    config_error(fmt::format("config field '{}' has the wrong type", key));
  }
}

}  // namespace

ModelSpec ExperimentConfig::spec() const {
  ModelSpec s;
  s.model = model;
  s.d = d;
  s.size = size;
  s.sigma2 = sigma2;
  s.lambda_hi = lambda_hi;
  s.radius_factor = radius_factor;
  return s;
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) config_error("config must be a JSON object");
  static const char* const known[] = {"model",  "d",         "size",          "sigma2",       "trials",
                                      "master_seed", "lambda_hi", "radius_factor", "out_dir", "format",
                                      "write_curves", "threads", "mc_trials"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
      config_error(fmt::format("unknown config field '{}'", key));
    }
  }
  for (const char* key : {"model", "d", "size"}) {
    if (!j.contains(key)) config_error(fmt::format("config is missing '{}'", key));
  }
  ExperimentConfig cfg;
  const auto model = parse_model_kind(get_as<std::string>(j, "model"));
  if (!model || *model == ModelKind::Custom) {
    config_error(fmt::format("unknown model '{}'", j.at("model").dump()));
  }
  cfg.model = *model;
  cfg.d = get_as<int>(j, "d");
  cfg.size = get_as<double>(j, "size");
  if (j.contains("sigma2")) cfg.sigma2 = get_as<double>(j, "sigma2");
  if (j.contains("trials")) cfg.trials = get_as<int>(j, "trials");
  if (j.contains("master_seed")) cfg.master_seed = get_as<std::uint64_t>(j, "master_seed");
  if (j.contains("lambda_hi")) cfg.lambda_hi = get_as<double>(j, "lambda_hi");
  if (j.contains("radius_factor")) cfg.radius_factor = get_as<double>(j, "radius_factor");
  if (j.contains("out_dir")) cfg.out_dir = get_as<std::string>(j, "out_dir");
  if (j.contains("format")) {
    const auto f = get_as<std::string>(j, "format");
    if (f == "csv") {
      cfg.format = OutputFormat::Csv;
    } else if (f == "json") {
      cfg.format = OutputFormat::Json;
    } else {
      config_error(fmt::format("format must be csv or json, got '{}'", f));
    }
  }
  if (j.contains("write_curves")) cfg.write_curves = get_as<bool>(j, "write_curves");
  if (j.contains("threads")) cfg.threads = get_as<int>(j, "threads");
  if (j.contains("mc_trials")) cfg.mc_trials = get_as<int>(j, "mc_trials");
  validate_config(cfg);
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Config, fmt::format("cannot open config {}", path));
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Config, fmt::format("{}: {}", path, e.what()));
  }
  return config_from_json(j);
}

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) config_error("trials must be at least 1");
  if (cfg.threads < 0) config_error("threads must be non-negative");
  if (cfg.mc_trials < 1) config_error("mc_trials must be at least 1");
  try {
    check_spec(cfg.spec());
  } catch (const Error& e) {
    config_error(e.what());
  }
}

TrialRecord run_trial(const ExperimentConfig& cfg, const EcZeroSet& zeros, int trial) {
  TrialRecord rec;
  rec.trial = trial;
  rec.seed = trial_seed(cfg.master_seed, static_cast<std::uint64_t>(trial));
  const ModelSpec spec = cfg.spec();
  try {
    const FilteredComplex c = generate_complex(spec, rec.seed);
    // The Cech complex stops at dimension d, so its top degree is unreliable.
    const int max_degree = cfg.model == ModelKind::Boolean ? cfg.d - 1 : cfg.d;
    const Barcode b = compute_persistence(c, max_degree);
    std::vector<std::vector<double>> births;
    for (int k = 0; k <= max_degree; ++k) {
      auto bk = essential_births(b, k);
      for (double& t : bk) t = to_parameter(spec, t);
      births.push_back(std::move(bk));
    }
    for (const GapRecord& g : gap_records(births, zeros)) {
      DegreeResult r;
      r.k = g.k;
      r.births = births[static_cast<std::size_t>(g.k)];
      r.first_birth = g.t_perc;
      r.t_ec = g.t_ec;
      r.delta = g.delta;
      if (auto t = t_betti(b, g.k)) r.t_betti = to_parameter(spec, *t);
      rec.degrees.push_back(std::move(r));
    }
    if (cfg.write_curves) {
      const StepCurve ec = euler_curve_from_counts(c);
      const auto& grid = ec.breakpoints();
      rec.ec = ec.values();
      for (int k = 0; k < cfg.d; ++k) rec.betti.push_back(betti_curve(b, k).sample(grid));
      rec.curve_grid.reserve(grid.size());
      for (double t : grid) rec.curve_grid.push_back(to_parameter(spec, t));
    }
    rec.valid = true;
  } catch (const std::exception& e) {
    rec.valid = false;
    rec.error = e.what();
    rec.degrees.clear();
    rec.curve_grid.clear();
    rec.ec.clear();
    rec.betti.clear();
  }
  return rec;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  validate_config(cfg);
  ExperimentResult result;
  MonteCarloOptions mc;
  mc.trials = cfg.mc_trials;
  mc.seed = mix64(cfg.master_seed ^ 0x6563u);
  result.zeros = ec_zero_set(cfg.spec(), mc);
  result.records.resize(static_cast<std::size_t>(cfg.trials));

  unsigned workers = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads) : std::thread::hardware_concurrency();
  workers = std::clamp(workers, 1u, static_cast<unsigned>(cfg.trials));
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next++; i < cfg.trials; i = next++) {
      result.records[static_cast<std::size_t>(i)] = run_trial(cfg, result.zeros, i);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  try {
    result.stats = aggregate(cfg, result.records);
  } catch (const Error& e) {
    result.stats_error = e.what();
  }
  return result;
}

DegreeStats summarize_degree(int k, std::vector<double> births, std::vector<double> deltas, double t_ec) {
  if (births.empty()) throw Error(ErrorCode::NoValidTrials, fmt::format("no valid trials in degree {}", k));
  // Sorting makes the sums independent of trial order.
  std::sort(births.begin(), births.end());
  std::sort(deltas.begin(), deltas.end());
  DegreeStats s;
  s.k = k;
  s.trials = static_cast<int>(births.size());
  s.t_ec = t_ec;
  const double n = static_cast<double>(births.size());
  double sum = 0.0;
  for (double b : births) sum += b;
  s.mean_birth = sum / n;
  double ss = 0.0;
  for (double b : births) ss += (b - s.mean_birth) * (b - s.mean_birth);
  s.low_dof = births.size() < 2;
  s.std_birth = s.low_dof ? 0.0 : std::sqrt(ss / (n - 1.0));
  double dsum = 0.0;
  for (double v : deltas) dsum += v;
  s.mean_delta = deltas.empty() ? 0.0 : dsum / static_cast<double>(deltas.size());
  return s;
}

AggregateStats aggregate(const ExperimentConfig& cfg, const std::vector<TrialRecord>& records) {
  AggregateStats stats;
  stats.model = cfg.model;
  stats.d = cfg.d;
  stats.size = cfg.size;
  const int invalid = static_cast<int>(std::count_if(records.begin(), records.end(), [](const TrialRecord& r) {
    return !r.valid;
  }));
  for (int k = 1; k < cfg.d; ++k) {
    std::vector<double> births;
    std::vector<double> deltas;
    double t_ec = 0.0;
    for (const TrialRecord& r : records) {
      if (!r.valid) continue;
      const DegreeResult& dr = r.degrees.at(static_cast<std::size_t>(k - 1));
      births.push_back(dr.first_birth);
      deltas.push_back(dr.delta);
      t_ec = dr.t_ec;
    }
    if (births.empty()) throw Error(ErrorCode::NoValidTrials, fmt::format("no valid trials in degree {}", k));
    DegreeStats s = summarize_degree(k, std::move(births), std::move(deltas), t_ec);
    s.invalid = invalid;
    stats.degrees.push_back(s);
  }
  return stats;
}

}  // namespace hperc
