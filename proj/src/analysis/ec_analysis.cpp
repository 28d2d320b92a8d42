#include "hperc/analysis/ec_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <fmt/format.h>

#include "hperc/analysis/roots.hpp"
#include "hperc/core/curves.hpp"
#include "hperc/core/error.hpp"
#include "hperc/core/rng.hpp"

namespace hperc {

std::vector<double> uniform_grid(double lo, double hi, int points) {
  if (points < 2 || !(hi > lo)) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("grid of {} points on [{}, {}]", points, lo, hi));
  }
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (points - 1);
  grid.back() = hi;
  return grid;
}

MonteCarloEc monte_carlo_ec(const ModelSpec& spec, int trials, std::span<const double> grid,
                            std::uint64_t master_seed) {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "monte carlo needs at least one trial");
  ModelSpec full = spec;
  if (full.model == ModelKind::Boolean) {
    // The EC of the union of balls needs every simplex of the nerve.
    full.cech_max_dim = 64;
    full.lambda_hi = grid.empty() ? 1.0 : std::max(grid.back(), 1e-9) * (1.0 + 1e-9);
    full.radius_factor = 1.0;
  }
  std::vector<double> at(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) at[i] = to_filtration_value(full, grid[i]);

  MonteCarloEc out;
  out.grid.assign(grid.begin(), grid.end());
  std::vector<double> sum(grid.size(), 0.0);
  std::vector<double> sum_sq(grid.size(), 0.0);
  for (int t = 0; t < trials; ++t) {
    const FilteredComplex c = generate_complex(full, trial_seed(master_seed, static_cast<std::uint64_t>(t)));
    const std::vector<double> v = euler_curve_from_counts(c).sample(at);
    for (std::size_t i = 0; i < v.size(); ++i) {
      sum[i] += v[i];
      sum_sq[i] += v[i] * v[i];
    }
  }
  out.mean.resize(grid.size());
  out.std_err.resize(grid.size());
  const double n = trials;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out.mean[i] = sum[i] / n;
    if (trials > 1) {
      const double var = std::max(0.0, (sum_sq[i] - n * out.mean[i] * out.mean[i]) / (n - 1.0));
      out.std_err[i] = std::sqrt(var / n);
    }
  }
  out.zeros = interpolated_zeros(out.grid, out.mean);
  return out;
}

EcZeroSet ec_zero_set(const ModelSpec& spec, const MonteCarloOptions& mc) {
  EcZeroSet z;
  z.model = spec.model;
  z.d = spec.d;
  std::tie(z.lo, z.hi) = parameter_domain(spec);
  std::vector<double> roots;
  if (has_analytic_ec(spec)) {
    roots = find_zeros([&](double t) { return expected_ec(spec, t); }, z.lo, z.hi);
  } else {
    check_spec(spec);
    roots = monte_carlo_ec(spec, mc.trials, uniform_grid(z.lo, z.hi, mc.grid_points), mc.seed).zeros;
  }
  const double margin = 1e-6 * (z.hi - z.lo);
  for (double r : roots) {
    if (r > z.lo + margin && r < z.hi - margin) z.zeros.push_back(r);
  }
  if (static_cast<int>(z.zeros.size()) != spec.d - 1) {
    throw Error(ErrorCode::ZeroCountMismatch,
                fmt::format("{} d={}: expected {} interior EC zeros, got {}", to_string(spec.model), spec.d,
                            spec.d - 1, z.zeros.size()));
  }
  return z;
}

std::optional<double> t_betti(const Barcode& b, int k) {
  if (k < 1 || k > b.max_degree) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("t_betti degree {} outside [1, {}]", k, b.max_degree));
  }
  const StepCurve hi = betti_curve(b, k);
  const StepCurve lo = betti_curve(b, k - 1);
  std::set<double> events(hi.breakpoints().begin(), hi.breakpoints().end());
  events.insert(lo.breakpoints().begin(), lo.breakpoints().end());
  for (double t : events) {
    const double bk = hi(t);
    const double bl = lo(t);
    if (bk >= bl && std::max(bk, bl) > 0.0) return t;
  }
  return std::nullopt;
}

std::vector<GapRecord> gap_records(const std::vector<std::vector<double>>& births, const EcZeroSet& zeros) {
  const int d = zeros.d;
  if (static_cast<int>(zeros.zeros.size()) != d - 1 || static_cast<int>(births.size()) < d) {
    throw Error(ErrorCode::DegreeMismatch,
                fmt::format("{} zeros and {} birth degrees for d = {}", zeros.zeros.size(), births.size(), d));
  }
  std::vector<GapRecord> out;
  for (int k = 1; k < d; ++k) {
    const auto& bk = births[static_cast<std::size_t>(k)];
    if (bk.empty()) throw Error(ErrorCode::DegreeMismatch, fmt::format("no births in degree {}", k));
    GapRecord g;
    g.k = k;
    g.t_perc = *std::min_element(bk.begin(), bk.end());
    g.t_ec = zeros.zeros[static_cast<std::size_t>(k - 1)];
    g.delta = g.t_perc - g.t_ec;
    out.push_back(g);
  }
  return out;
}

}  // namespace hperc
