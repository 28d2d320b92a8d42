#include "hperc/harness/io.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "hperc/core/error.hpp"

namespace hperc {

namespace fs = std::filesystem;

namespace {

std::string num(double v) { return fmt::format("{:.17g}", v); }

std::string join_births(const std::vector<double>& births) {
  std::string out;
  for (std::size_t i = 0; i < births.size(); ++i) {
    if (i) out += ';';
    out += num(births[i]);
  }
  return out;
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream os(path);
  if (!os) throw Error(ErrorCode::Io, fmt::format("cannot write {}", path.string()));
  return os;
}

void finish(std::ofstream& os, const fs::path& path) {
  os.flush();
  if (!os) throw Error(ErrorCode::Io, fmt::format("write failed for {}", path.string()));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(s);
  while (std::getline(is, field, sep)) out.push_back(field);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

double parse_double(const std::string& s, const fs::path& path, std::size_t line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::Io, fmt::format("{}:{}: bad number '{}'", path.string(), line, s));
  }
}

}  // namespace

void write_trials_csv(std::ostream& os, const ExperimentConfig& cfg, const std::vector<TrialRecord>& records) {
  os << kTrialsHeader << '\n';
  const auto model = to_string(cfg.model);
  for (const TrialRecord& r : records) {
    for (int k = 1; k < cfg.d; ++k) {
      os << fmt::format("{},{},{},{},{},{},", r.trial, r.seed, model, cfg.d, num(cfg.size), k);
      if (r.valid) {
        const DegreeResult& dr = r.degrees[static_cast<std::size_t>(k - 1)];
        os << fmt::format("{},{},{},{},{},1\n", num(dr.first_birth), join_births(dr.births), num(dr.t_ec),
                          num(dr.delta), dr.t_betti ? num(*dr.t_betti) : std::string());
      } else {
        os << ",,,,,0\n";
      }
    }
  }
}

void write_aggregate_csv(std::ostream& os, const AggregateStats& stats) {
  os << kAggregateHeader << '\n';
  const auto model = to_string(stats.model);
  for (const DegreeStats& s : stats.degrees) {
    os << fmt::format("{},{},{},{},{},{},{},{},{},{}\n", model, stats.d, num(stats.size), s.k, s.trials, s.invalid,
                      num(s.mean_birth), num(s.std_birth), num(s.t_ec), num(s.mean_delta));
  }
}

void write_curves_csv(std::ostream& os, const ExperimentConfig& cfg, const std::vector<TrialRecord>& records) {
  os << "trial,t,ec";
  for (int k = 0; k < cfg.d; ++k) os << ",betti_" << k;
  os << '\n';
  for (const TrialRecord& r : records) {
    for (std::size_t i = 0; i < r.curve_grid.size(); ++i) {
      os << r.trial << ',' << num(r.curve_grid[i]) << ',' << num(r.ec[i]);
      for (const auto& b : r.betti) os << ',' << num(b[i]);
      os << '\n';
    }
  }
}

void write_expected_ec_csv(std::ostream& os, const ExperimentConfig& cfg, const EcZeroSet& zeros) {
  os << "t,expected_ec\n";
  const ModelSpec spec = cfg.spec();
  if (!has_analytic_ec(spec)) return;
  for (double t : uniform_grid(zeros.lo, zeros.hi, 1001)) os << num(t) << ',' << num(expected_ec(spec, t)) << '\n';
}

nlohmann::json trials_json(const ExperimentConfig& cfg, const std::vector<TrialRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const TrialRecord& r : records) {
    for (int k = 1; k < cfg.d; ++k) {
      nlohmann::json o;
      o["trial"] = r.trial;
      o["seed"] = r.seed;
      o["model"] = std::string(to_string(cfg.model));
      o["d"] = cfg.d;
      o["size"] = cfg.size;
      o["degree"] = k;
      if (r.valid) {
        const DegreeResult& dr = r.degrees[static_cast<std::size_t>(k - 1)];
        o["first_birth"] = dr.first_birth;
        o["all_births"] = dr.births;
        o["t_ec"] = dr.t_ec;
        o["delta"] = dr.delta;
        o["t_betti"] = dr.t_betti ? nlohmann::json(*dr.t_betti) : nlohmann::json(nullptr);
      } else {
        o["first_birth"] = nullptr;
        o["all_births"] = nlohmann::json::array();
        o["t_ec"] = nullptr;
        o["delta"] = nullptr;
        o["t_betti"] = nullptr;
        o["error"] = r.error;
      }
      o["valid"] = r.valid;
      arr.push_back(std::move(o));
    }
  }
  return arr;
}

nlohmann::json aggregate_json(const AggregateStats& stats) {
  nlohmann::json arr = nlohmann::json::array();
  for (const DegreeStats& s : stats.degrees) {
    arr.push_back({{"model", std::string(to_string(stats.model))},
                   {"d", stats.d},
                   {"size", stats.size},
                   {"degree", s.k},
                   {"trials", s.trials},
                   {"invalid", s.invalid},
                   {"mean_birth", s.mean_birth},
                   {"std_birth", s.std_birth},
                   {"t_ec", s.t_ec},
                   {"mean_delta", s.mean_delta}});
  }
  return arr;
}

nlohmann::json zero_set_json(const EcZeroSet& zeros) {
  return {{"model", std::string(to_string(zeros.model))},
          {"d", zeros.d},
          {"domain", {zeros.lo, zeros.hi}},
          {"zeros", zeros.zeros}};
}

std::vector<fs::path> emit(const ExperimentConfig& cfg, const ExperimentResult& result) {
  const fs::path dir(cfg.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::Io, fmt::format("cannot create {}: {}", dir.string(), ec.message()));
  std::vector<fs::path> written;
  auto write = [&](const std::string& name, auto&& body) {
    const fs::path path = dir / name;
    std::ofstream os = open_out(path);
    body(os);
    finish(os, path);
    written.push_back(path);
  };
  const bool json = cfg.format == OutputFormat::Json;
  if (json) {
    write("trials.json", [&](std::ostream& os) { os << trials_json(cfg, result.records).dump(2) << '\n'; });
    if (result.stats) {
      write("aggregate.json", [&](std::ostream& os) { os << aggregate_json(*result.stats).dump(2) << '\n'; });
    }
    write("zeros.json", [&](std::ostream& os) { os << zero_set_json(result.zeros).dump(2) << '\n'; });
  } else {
    write("trials.csv", [&](std::ostream& os) { write_trials_csv(os, cfg, result.records); });
    if (result.stats) write("aggregate.csv", [&](std::ostream& os) { write_aggregate_csv(os, *result.stats); });
  }
  write("expected_ec.csv", [&](std::ostream& os) { write_expected_ec_csv(os, cfg, result.zeros); });
  if (cfg.write_curves) write("curves.csv", [&](std::ostream& os) { write_curves_csv(os, cfg, result.records); });
  return written;
}

std::vector<TrialRow> read_trial_rows(const fs::path& dir) {
  std::vector<TrialRow> rows;
  const fs::path csv = dir / "trials.csv";
  const fs::path js = dir / "trials.json";
  if (fs::exists(csv)) {
    std::ifstream in(csv);
    if (!in) throw Error(ErrorCode::Io, fmt::format("cannot read {}", csv.string()));
    std::string line;
    if (!std::getline(in, line) || line != kTrialsHeader) {
      throw Error(ErrorCode::Io, fmt::format("{}: unexpected header", csv.string()));
    }
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      const auto f = split(line, ',');
      if (f.size() != 12) throw Error(ErrorCode::Io, fmt::format("{}:{}: expected 12 fields", csv.string(), lineno));
      TrialRow r;
      r.trial = static_cast<int>(parse_double(f[0], csv, lineno));
      r.seed = std::stoull(f[1]);
      r.model = f[2];
      r.d = static_cast<int>(parse_double(f[3], csv, lineno));
      r.size = parse_double(f[4], csv, lineno);
      r.degree = static_cast<int>(parse_double(f[5], csv, lineno));
      r.valid = f[11] == "1";
      if (r.valid) {
        r.first_birth = parse_double(f[6], csv, lineno);
        for (const auto& b : split(f[7], ';')) r.births.push_back(parse_double(b, csv, lineno));
        r.t_ec = parse_double(f[8], csv, lineno);
        r.delta = parse_double(f[9], csv, lineno);
      }
      rows.push_back(std::move(r));
    }
    return rows;
  }
  if (fs::exists(js)) {
    std::ifstream in(js);
    nlohmann::json arr;
    try {
      in >> arr;
      for (const auto& o : arr) {
        TrialRow r;
        r.trial = o.at("trial").get<int>();
        r.seed = o.at("seed").get<std::uint64_t>();
        r.model = o.at("model").get<std::string>();
        r.d = o.at("d").get<int>();
        r.size = o.at("size").get<double>();
        r.degree = o.at("degree").get<int>();
        r.valid = o.at("valid").get<bool>();
        if (r.valid) {
          r.first_birth = o.at("first_birth").get<double>();
          r.births = o.at("all_births").get<std::vector<double>>();
          r.t_ec = o.at("t_ec").get<double>();
          r.delta = o.at("delta").get<double>();
        }
        rows.push_back(std::move(r));
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::Io, fmt::format("{}: {}", js.string(), e.what()));
    }
    return rows;
  }
  throw Error(ErrorCode::Io, fmt::format("no trials.csv or trials.json in {}", dir.string()));
}

AggregateStats aggregate_rows(const std::vector<TrialRow>& rows) {
  if (rows.empty()) throw Error(ErrorCode::NoValidTrials, "trial file has no rows");
  AggregateStats stats;
  const auto model = parse_model_kind(rows.front().model);
  if (!model) throw Error(ErrorCode::Io, fmt::format("unknown model '{}'", rows.front().model));
  stats.model = *model;
  stats.d = rows.front().d;
  stats.size = rows.front().size;
  std::map<int, std::vector<const TrialRow*>> by_degree;
  for (const TrialRow& r : rows) {
    if (r.model != rows.front().model || r.d != stats.d || r.size != stats.size) {
      throw Error(ErrorCode::Io, "trial file mixes several experiments");
    }
    by_degree[r.degree].push_back(&r);
  }
  for (const auto& [k, group] : by_degree) {
    std::vector<double> births;
    std::vector<double> deltas;
    double t_ec = 0.0;
    int invalid = 0;
    for (const TrialRow* r : group) {
      if (!r->valid) {
        ++invalid;
        continue;
      }
      births.push_back(r->first_birth);
      deltas.push_back(r->delta);
      t_ec = r->t_ec;
    }
    DegreeStats s = summarize_degree(k, std::move(births), std::move(deltas), t_ec);
    s.invalid = invalid;
    stats.degrees.push_back(s);
  }
  return stats;
}

}  // namespace hperc
