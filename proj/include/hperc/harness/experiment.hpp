#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hperc/analysis/ec_analysis.hpp"
#include "hperc/core/curves.hpp"

namespace hperc {

enum class OutputFormat { Csv, Json };

struct ExperimentConfig {
  ModelKind model = ModelKind::Cubical;
  int d = 2;
  double size = 0.0;
  double sigma2 = 1e-3;
  int trials = 1;
  std::uint64_t master_seed = 0;
  double lambda_hi = 0.0;  // 0 means 2d
  double radius_factor = 0.0;  // 0 means default_radius_factor(d)
  std::string out_dir = "out";
  OutputFormat format = OutputFormat::Csv;
  bool write_curves = true;
  int threads = 0;     // 0 means hardware concurrency
  int mc_trials = 20;  // boolean d = 4 only

  ModelSpec spec() const;
};

// Throws Error(Config) on unknown keys, wrong types or invalid values.
ExperimentConfig config_from_json(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);
void validate_config(const ExperimentConfig& cfg);

struct DegreeResult {
  int k = 0;
  std::vector<double> births;  // essential births in parameter units
  double first_birth = 0.0;
  double t_ec = 0.0;
  double delta = 0.0;
  std::optional<double> t_betti;
};

struct TrialRecord {
  int trial = 0;
  std::uint64_t seed = 0;
  bool valid = false;
  std::string error;
  std::vector<DegreeResult> degrees;  // k = 1..d-1 when valid
  // Sampled at `curve_grid` in parameter units: EC and beta_0..beta_{d-1}.
  std::vector<double> curve_grid;
  std::vector<double> ec;
  std::vector<std::vector<double>> betti;
};

struct DegreeStats {
  int k = 0;
  int trials = 0;   // valid trials
  int invalid = 0;
  double mean_birth = 0.0;
  double std_birth = 0.0;
  double t_ec = 0.0;
  double mean_delta = 0.0;
  bool low_dof = false;  // a single valid trial; std is reported as 0
};

struct AggregateStats {
  ModelKind model = ModelKind::Cubical;
  int d = 0;
  double size = 0.0;
  std::vector<DegreeStats> degrees;
};

TrialRecord run_trial(const ExperimentConfig& cfg, const EcZeroSet& zeros, int trial);

struct ExperimentResult {
  EcZeroSet zeros;
  std::vector<TrialRecord> records;
  std::optional<AggregateStats> stats;  // empty when some degree has no valid trial
  std::string stats_error;
};

// Runs all trials in a thread pool; records come back in trial order.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// Mean and sample std of births, mean of deltas. Throws NoValidTrials if
// births is empty.
DegreeStats summarize_degree(int k, std::vector<double> births, std::vector<double> deltas, double t_ec);

// Over valid records only. Throws NoValidTrials if a degree has none.
AggregateStats aggregate(const ExperimentConfig& cfg, const std::vector<TrialRecord>& records);

}  // namespace hperc
