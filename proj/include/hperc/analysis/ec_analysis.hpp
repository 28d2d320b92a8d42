#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hperc/analysis/model.hpp"
#include "hperc/core/persistence.hpp"

namespace hperc {

struct EcZeroSet {
  ModelKind model = ModelKind::Cubical;
  int d = 0;
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> zeros;  // strictly increasing, interior only
};

struct MonteCarloOptions {
  int trials = 20;
  int grid_points = 201;
  std::uint64_t seed = 1;
};

struct MonteCarloEc {
  std::vector<double> grid;     // parameter values
  std::vector<double> mean;     // averaged EC
  std::vector<double> std_err;  // standard error of the mean, 0 for one trial
  std::vector<double> zeros;
};

// Average of the empirical EC curves of `trials` complexes (trial seeds from
// `master_seed`) sampled at the parameter grid.
MonteCarloEc monte_carlo_ec(const ModelSpec& spec, int trials, std::span<const double> grid,
                            std::uint64_t master_seed);

std::vector<double> uniform_grid(double lo, double hi, int points);

// Interior zeros of the expected EC curve. Uses the closed form when there is
// one and a Monte Carlo average otherwise. Throws ZeroCountMismatch unless
// there are exactly d - 1.
EcZeroSet ec_zero_set(const ModelSpec& spec, const MonteCarloOptions& mc = {});

// First breakpoint t with beta_k(t) >= beta_{k-1}(t) and one of them nonzero,
// in filtration units. Empty if the curves never meet.
std::optional<double> t_betti(const Barcode& b, int k);

struct GapRecord {
  int k = 0;
  double t_perc = 0.0;
  double t_ec = 0.0;
  double delta = 0.0;
};

// births[k] holds the essential degree-k births in parameter units. One
// record for each k = 1..d-1 with t_perc the smallest birth.
std::vector<GapRecord> gap_records(const std::vector<std::vector<double>>& births, const EcZeroSet& zeros);

}  // namespace hperc
