#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "hperc/harness/experiment.hpp"

namespace hperc {

inline constexpr const char* kTrialsHeader = "trial,seed,model,d,size,degree,first_birth,all_births,t_ec,delta,t_betti,valid";
inline constexpr const char* kAggregateHeader = "model,d,size,degree,trials,invalid,mean_birth,std_birth,t_ec,mean_delta";

void write_trials_csv(std::ostream& os, const ExperimentConfig& cfg, const std::vector<TrialRecord>& records);
void write_aggregate_csv(std::ostream& os, const AggregateStats& stats);
void write_curves_csv(std::ostream& os, const ExperimentConfig& cfg, const std::vector<TrialRecord>& records);
void write_expected_ec_csv(std::ostream& os, const ExperimentConfig& cfg, const EcZeroSet& zeros);

nlohmann::json trials_json(const ExperimentConfig& cfg, const std::vector<TrialRecord>& records);
nlohmann::json aggregate_json(const AggregateStats& stats);
nlohmann::json zero_set_json(const EcZeroSet& zeros);

// Writes trials, aggregate, expected EC and (optionally) curve files into
// cfg.out_dir. Returns the paths written.
std::vector<std::filesystem::path> emit(const ExperimentConfig& cfg, const ExperimentResult& result);

// One flat row of a trials file.
struct TrialRow {
  int trial = 0;
  std::uint64_t seed = 0;
  std::string model;
  int d = 0;
  double size = 0.0;
  int degree = 0;
  double first_birth = 0.0;
  std::vector<double> births;
  double t_ec = 0.0;
  double delta = 0.0;
  bool valid = false;
};

// Reads trials.csv or trials.json from a run directory.
std::vector<TrialRow> read_trial_rows(const std::filesystem::path& dir);
AggregateStats aggregate_rows(const std::vector<TrialRow>& rows);

}  // namespace hperc
