#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <doctest.h>

#include "hperc/harness/experiment.hpp"
#include "hperc/harness/io.hpp"

using namespace hperc;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("hperc_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) out.push_back(line);
  return out;
}

ExperimentConfig small_config(ModelKind model, int d, double size, int trials) {
  ExperimentConfig cfg;
  cfg.model = model;
  cfg.d = d;
  cfg.size = size;
  cfg.trials = trials;
  cfg.master_seed = 2024;
  cfg.threads = 1;
  return cfg;
}

ErrorCode config_code(const nlohmann::json& j) {
  try {
    config_from_json(j);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("config parsing") {
  const auto cfg = config_from_json(nlohmann::json::parse(R"({"model":"perm","d":3,"size":8,"trials":4,
      "master_seed":9,"format":"json","write_curves":false,"threads":2})"));
  CHECK(cfg.model == ModelKind::Permutahedral);
  CHECK(cfg.d == 3);
  CHECK(cfg.size == 8.0);
  CHECK(cfg.trials == 4);
  CHECK(cfg.master_seed == 9u);
  CHECK(cfg.format == OutputFormat::Json);
  CHECK_FALSE(cfg.write_curves);
  CHECK(cfg.threads == 2);
  CHECK(cfg.sigma2 == 1e-3);

  CHECK(config_code(nlohmann::json::parse(R"({"model":"perm","d":3,"size":8,"colour":1})")) == ErrorCode::Config);
  CHECK(config_code(nlohmann::json::parse(R"({"model":"perm","size":8})")) == ErrorCode::Config);
  CHECK(config_code(nlohmann::json::parse(R"({"model":"hexagons","d":2,"size":8})")) == ErrorCode::Config);
  CHECK(config_code(nlohmann::json::parse(R"({"model":"perm","d":"two","size":8})")) == ErrorCode::Config);
  CHECK(config_code(nlohmann::json::parse(R"({"model":"perm","d":2,"size":8,"format":"xml"})")) == ErrorCode::Config);
  CHECK(config_code(nlohmann::json::parse(R"({"model":"cubical","d":7,"size":8})")) == ErrorCode::Config);
  CHECK(config_code(nlohmann::json::parse(R"({"model":"cubical","d":2,"size":8,"trials":0})")) == ErrorCode::Config);
  CHECK(config_code(nlohmann::json::parse(R"([1,2])")) == ErrorCode::Config);

  const fs::path dir = scratch_dir("config");
  fs::create_directories(dir);
  std::ofstream(dir / "bad.json") << "{ not json";
  try {
    load_config((dir / "bad.json").string());
    FAIL("expected a config error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Config);
  }
  CHECK_THROWS_AS(load_config((dir / "missing.json").string()), Error);
}

TEST_CASE("summarize_degree") {
  const auto s = summarize_degree(1, {0.4, 0.6}, {-0.1, 0.1}, 0.5);
  CHECK(s.trials == 2);
  CHECK(s.mean_birth == doctest::Approx(0.5));
  CHECK(s.std_birth == doctest::Approx(std::sqrt(0.02)));
  CHECK(s.mean_delta == doctest::Approx(0.0).scale(1.0));
  CHECK_FALSE(s.low_dof);

  const auto one = summarize_degree(2, {0.7}, {0.2}, 0.5);
  CHECK(one.std_birth == 0.0);
  CHECK(one.low_dof);
  CHECK(one.mean_birth == 0.7);

  try {
    summarize_degree(1, {}, {}, 0.5);
    FAIL("expected NoValidTrials");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoValidTrials);
  }

  std::vector<double> births, deltas;
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    births.push_back(u(gen) * std::pow(10.0, static_cast<int>(u(gen) * 8) - 4));
    deltas.push_back(births.back() - 0.5);
  }
  const auto ref = summarize_degree(1, births, deltas, 0.5);
  for (int rep = 0; rep < 5; ++rep) {
    std::vector<std::size_t> perm(births.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), gen);
    std::vector<double> pb, pd;
    for (std::size_t i : perm) {
      pb.push_back(births[i]);
      pd.push_back(deltas[i]);
    }
    const auto s2 = summarize_degree(1, pb, pd, 0.5);
    CHECK(s2.mean_birth == ref.mean_birth);
    CHECK(s2.std_birth == ref.std_birth);
    CHECK(s2.mean_delta == ref.mean_delta);
  }
}

TEST_CASE("aggregate skips invalid trials") {
  const auto cfg = small_config(ModelKind::Cubical, 3, 6, 4);
  std::vector<TrialRecord> records(4);
  for (int t = 0; t < 4; ++t) {
    auto& r = records[static_cast<std::size_t>(t)];
    r.trial = t;
    r.valid = t != 2;
    if (!r.valid) {
      r.error = "synthetic";
      continue;
    }
    for (int k = 1; k <= 2; ++k) {
      DegreeResult dr;
      dr.k = k;
      dr.first_birth = 0.1 * k + 0.01 * t;
      dr.births = {dr.first_birth};
      dr.t_ec = 0.1 * k;
      dr.delta = dr.first_birth - dr.t_ec;
      r.degrees.push_back(dr);
    }
  }
  const auto stats = aggregate(cfg, records);
  REQUIRE(stats.degrees.size() == 2);
  CHECK(stats.degrees[0].trials == 3);
  CHECK(stats.degrees[0].invalid == 1);
  CHECK(stats.degrees[0].mean_birth == doctest::Approx(0.1 + 0.01 * 4.0 / 3.0));
  CHECK(stats.degrees[1].mean_delta == doctest::Approx(0.01 * 4.0 / 3.0));

  for (auto& r : records) r.valid = false;
  CHECK_THROWS_AS(aggregate(cfg, records), Error);
}

TEST_CASE("run_experiment on the cubical model") {
  auto cfg = small_config(ModelKind::Cubical, 3, 6, 5);
  const auto result = run_experiment(cfg);
  REQUIRE(result.records.size() == 5);
  REQUIRE(result.stats.has_value());
  CHECK(result.zeros.zeros.size() == 2);
  for (int t = 0; t < 5; ++t) {
    const auto& r = result.records[static_cast<std::size_t>(t)];
    CHECK(r.trial == t);
    CHECK(r.valid);
    REQUIRE(r.degrees.size() == 2);
    for (const auto& dr : r.degrees) {
      CHECK(dr.births.size() == 3u);
      CHECK(dr.first_birth == *std::min_element(dr.births.begin(), dr.births.end()));
      CHECK(dr.delta == doctest::Approx(dr.first_birth - dr.t_ec));
    }
    REQUIRE_FALSE(r.ec.empty());
    CHECK(r.ec.back() == 0.0);
    CHECK(r.betti.size() == 3u);
    // The degree-3 class appears with the last cell, at the final grid point.
    for (std::size_t i = 0; i < r.ec.size(); ++i) {
      const double top = i + 1 == r.ec.size() ? 1.0 : 0.0;
      CHECK(r.ec[i] == r.betti[0][i] - r.betti[1][i] + r.betti[2][i] - top);
    }
  }

  const fs::path dir = scratch_dir("cubical");
  cfg.out_dir = dir.string();
  const auto written = emit(cfg, result);
  CHECK(fs::exists(dir / "trials.csv"));
  CHECK(fs::exists(dir / "aggregate.csv"));
  CHECK(fs::exists(dir / "expected_ec.csv"));
  CHECK(fs::exists(dir / "curves.csv"));
  CHECK(written.size() == 4u);

  const auto trials = lines_of(slurp(dir / "trials.csv"));
  CHECK(trials.front() == kTrialsHeader);
  CHECK(trials.size() == 1 + 5 * 2);
  const auto agg = lines_of(slurp(dir / "aggregate.csv"));
  CHECK(agg.front() == kAggregateHeader);
  CHECK(agg.size() == 3u);
  const auto expected = lines_of(slurp(dir / "expected_ec.csv"));
  CHECK(expected.front() == "t,expected_ec");
  CHECK(expected.size() == 1002u);
  CHECK(lines_of(slurp(dir / "curves.csv")).front() == "trial,t,ec,betti_0,betti_1,betti_2");

  SUBCASE("stats round trip") {
    const auto stats = aggregate_rows(read_trial_rows(dir));
    REQUIRE(stats.degrees.size() == result.stats->degrees.size());
    for (std::size_t i = 0; i < stats.degrees.size(); ++i) {
      CHECK(stats.degrees[i].mean_birth == result.stats->degrees[i].mean_birth);
      CHECK(stats.degrees[i].std_birth == result.stats->degrees[i].std_birth);
      CHECK(stats.degrees[i].mean_delta == result.stats->degrees[i].mean_delta);
      CHECK(stats.degrees[i].trials == 5);
    }
  }
}

TEST_CASE("reruns are byte-identical across thread counts") {
  auto cfg = small_config(ModelKind::Permutahedral, 2, 12, 6);
  const fs::path a = scratch_dir("rerun_a"), b = scratch_dir("rerun_b"), c = scratch_dir("rerun_c");
  cfg.out_dir = a.string();
  emit(cfg, run_experiment(cfg));
  cfg.out_dir = b.string();
  emit(cfg, run_experiment(cfg));
  cfg.out_dir = c.string();
  cfg.threads = 3;
  emit(cfg, run_experiment(cfg));
  for (const char* f : {"trials.csv", "aggregate.csv", "curves.csv", "expected_ec.csv"}) {
    CHECK(slurp(a / f) == slurp(b / f));
    CHECK(slurp(a / f) == slurp(c / f));
  }
  cfg.master_seed += 1;
  cfg.out_dir = b.string();
  emit(cfg, run_experiment(cfg));
  CHECK(slurp(a / "trials.csv") != slurp(b / "trials.csv"));
}

TEST_CASE("json output") {
  auto cfg = small_config(ModelKind::Permutahedral, 3, 5, 3);
  cfg.format = OutputFormat::Json;
  cfg.write_curves = false;
  const fs::path dir = scratch_dir("json");
  cfg.out_dir = dir.string();
  const auto result = run_experiment(cfg);
  emit(cfg, result);
  CHECK_FALSE(fs::exists(dir / "curves.csv"));
  const auto trials = nlohmann::json::parse(slurp(dir / "trials.json"));
  REQUIRE(trials.size() == 6u);
  for (const char* key : {"trial", "seed", "model", "d", "size", "degree", "first_birth", "all_births", "t_ec", "delta",
                          "t_betti", "valid"}) {
    CHECK(trials[0].contains(key));
  }
  CHECK(trials[0]["model"] == "perm");
  const auto agg = nlohmann::json::parse(slurp(dir / "aggregate.json"));
  REQUIRE(agg.size() == 2u);
  for (const char* key : {"model", "d", "size", "degree", "trials", "invalid", "mean_birth", "std_birth", "t_ec",
                          "mean_delta"}) {
    CHECK(agg[0].contains(key));
  }
  const auto zeros = nlohmann::json::parse(slurp(dir / "zeros.json"));
  CHECK(zeros["zeros"].size() == 2u);
  CHECK(zeros["d"] == 3);

  const auto stats = aggregate_rows(read_trial_rows(dir));
  CHECK(stats.degrees[0].mean_birth == result.stats->degrees[0].mean_birth);
}

TEST_CASE("boolean and grf trials are valid") {
  auto boolean = small_config(ModelKind::Boolean, 2, 300, 3);
  boolean.radius_factor = 1.5;
  const auto rb = run_experiment(boolean);
  for (const auto& r : rb.records) CHECK_MESSAGE(r.valid, r.error);
  CHECK(rb.zeros.zeros.size() == 1u);

  const auto rg = run_experiment(small_config(ModelKind::Grf, 2, 32, 3));
  for (const auto& r : rg.records) {
    CHECK_MESSAGE(r.valid, r.error);
    REQUIRE(r.degrees.size() == 1u);
    CHECK(r.degrees[0].births.size() == 2u);
  }
}
