#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "hperc/analysis/ec_analysis.hpp"
#include "hperc/continuum/grf.hpp"
#include "hperc/continuum/poisson.hpp"
#include "hperc/core/error.hpp"
#include "hperc/harness/experiment.hpp"
#include "hperc/harness/io.hpp"

namespace {

using namespace hperc;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitPartial = 3;
constexpr int kExitZeroCount = 4;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Config:
    case ErrorCode::InvalidArgument:
    case ErrorCode::UnsupportedDimension:
    case ErrorCode::SizeTooSmall:
    case ErrorCode::RadiusTooLarge:
      return kExitConfig;
    case ErrorCode::ZeroCountMismatch:
      return kExitZeroCount;
    default:
      return kExitFailure;
  }
}

ModelKind model_arg(const std::string& s) {
  const auto m = parse_model_kind(s);
  if (!m || *m == ModelKind::Custom) throw Error(ErrorCode::Config, fmt::format("unknown model '{}'", s));
  return *m;
}

double default_size(ModelKind m) {
  switch (m) {
    case ModelKind::Boolean:
      return 1000.0;
    case ModelKind::Grf:
      return 64.0;
    default:
      return 16.0;
  }
}

int cmd_gen(const std::string& model_name, int d, double size, std::uint64_t seed, double sigma2,
            const std::string& out) {
  ModelSpec spec;
  spec.model = model_arg(model_name);
  spec.d = d;
  spec.size = size;
  spec.sigma2 = sigma2;
  check_spec(spec);
  std::ofstream os(out);
  if (!os) throw Error(ErrorCode::Io, fmt::format("cannot write {}", out));
  switch (spec.model) {
    case ModelKind::Boolean:
      write_points_csv(os, sample_poisson_torus(size, d, seed));
      break;
    case ModelKind::Grf:
      write_field_csv(os, sample_grf_torus(d, static_cast<int>(size), sigma2, seed));
      break;
    default:
      write_dump(os, generate_complex(spec, seed));
      break;
  }
  os.flush();
  if (!os) throw Error(ErrorCode::Io, fmt::format("write failed for {}", out));
  return kExitOk;
}

int cmd_ec_zeros(const std::string& model_name, int d, double size, int mc_trials, std::uint64_t seed) {
  ModelSpec spec;
  spec.model = model_arg(model_name);
  spec.d = d;
  spec.size = size > 0.0 ? size : default_size(spec.model);
  check_spec(spec);
  MonteCarloOptions mc;
  mc.trials = mc_trials;
  mc.seed = seed;
  std::cout << zero_set_json(ec_zero_set(spec, mc)).dump() << '\n';
  return kExitOk;
}

int cmd_run(const std::string& config, int trials, const std::string& seed, const std::string& out,
            const std::string& format, int threads) {
  ExperimentConfig cfg = load_config(config);
  if (trials > 0) cfg.trials = trials;
  if (!seed.empty()) cfg.master_seed = std::stoull(seed);
  if (!out.empty()) cfg.out_dir = out;
  if (!format.empty()) cfg.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  if (threads > 0) cfg.threads = threads;
  validate_config(cfg);

  const ExperimentResult result = run_experiment(cfg);
  for (const auto& p : emit(cfg, result)) std::cerr << "wrote " << p.string() << '\n';
  int invalid = 0;
  for (const TrialRecord& r : result.records) {
    if (!r.valid) {
      ++invalid;
      std::cerr << fmt::format("trial {} invalid: {}\n", r.trial, r.error);
    }
  }
  if (!result.stats) {
    std::cerr << "no aggregate: " << result.stats_error << '\n';
    return kExitPartial;
  }
  for (const DegreeStats& s : result.stats->degrees) {
    if (s.low_dof) std::cerr << fmt::format("degree {}: one valid trial, std reported as 0\n", s.k);
  }
  write_aggregate_csv(std::cout, *result.stats);
  return invalid > 0 ? kExitPartial : kExitOk;
}

int cmd_stats(const std::string& in, const std::string& format) {
  const AggregateStats stats = aggregate_rows(read_trial_rows(in));
  if (format == "json") {
    std::cout << aggregate_json(stats).dump(2) << '\n';
  } else {
    write_aggregate_csv(std::cout, stats);
  }
  for (const DegreeStats& s : stats.degrees) {
    if (s.low_dof) std::cerr << fmt::format("degree {}: one valid trial, std reported as 0\n", s.k);
  }
  bool partial = false;
  for (const DegreeStats& s : stats.degrees) partial = partial || s.invalid > 0;
  return partial ? kExitPartial : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homological percolation and Euler characteristic zeros on the flat torus"};
  app.require_subcommand(1);

  std::string model;
  int dim = 2;
  double size = 0.0;
  std::uint64_t seed = 0;
  double sigma2 = 1e-3;
  std::string out;
  auto* gen = app.add_subcommand("gen", "Write one complex, point set or field");
  gen->add_option("--model", model, "cubical, perm, boolean or grf")->required();
  gen->add_option("--dim", dim, "Dimension")->required();
  gen->add_option("--size", size, "Side m, intensity n or grid g")->required();
  gen->add_option("--seed", seed, "Seed")->required();
  gen->add_option("--sigma2", sigma2, "GRF kernel bandwidth");
  gen->add_option("--out", out, "Output path")->required();

  int mc_trials = 20;
  auto* zeros = app.add_subcommand("ec-zeros", "Print the expected EC zeros as JSON");
  zeros->add_option("--model", model)->required();
  zeros->add_option("--dim", dim)->required();
  zeros->add_option("--size", size);
  zeros->add_option("--mc-trials", mc_trials, "Trials for Monte Carlo curves");
  zeros->add_option("--seed", seed, "Seed for Monte Carlo curves");

  std::string config;
  int trials = 0;
  std::string run_seed;
  std::string format;
  int threads = 0;
  auto* run = app.add_subcommand("run", "Run an experiment from a JSON config");
  run->add_option("--config", config)->required()->check(CLI::ExistingFile);
  run->add_option("--trials", trials);
  run->add_option("--seed", run_seed);
  run->add_option("--out", out);
  run->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  run->add_option("--threads", threads);

  std::string in;
  auto* stats = app.add_subcommand("stats", "Recompute aggregates from a run directory");
  stats->add_option("--in", in)->required()->check(CLI::ExistingDirectory);
  stats->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*gen) return cmd_gen(model, dim, size, seed, sigma2, out);
    if (*zeros) return cmd_ec_zeros(model, dim, size, mc_trials, seed);
    if (*run) return cmd_run(config, trials, run_seed, out, format, threads);
    if (*stats) return cmd_stats(in, format);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}
