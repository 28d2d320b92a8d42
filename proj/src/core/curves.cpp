#include "hperc/core/curves.hpp"

#include <algorithm>
#include <map>

#include <fmt/format.h>

namespace hperc {

StepCurve::StepCurve(std::vector<double> breakpoints, std::vector<double> values, double initial)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)), initial_(initial) {
  if (breakpoints_.size() != values_.size()) {
    throw Error(ErrorCode::InvalidArgument, "step curve needs one value per breakpoint");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i - 1] < breakpoints_[i])) {
      throw Error(ErrorCode::InvalidArgument, "step curve breakpoints must be strictly increasing");
    }
  }
}

double StepCurve::operator()(double t) const {
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  if (it == breakpoints_.begin()) return initial_;
  return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

std::vector<double> StepCurve::sample(std::span<const double> grid) const {
  std::vector<double> out;
  out.reserve(grid.size());
  for (double t : grid) out.push_back((*this)(t));
  return out;
}

namespace {

StepCurve curve_from_events(const std::map<double, long long>& delta) {
  std::vector<double> bp, vals;
  bp.reserve(delta.size());
  vals.reserve(delta.size());
  long long running = 0;
  for (const auto& [t, dv] : delta) {
    running += dv;
    bp.push_back(t);
    vals.push_back(static_cast<double>(running));
  }
  return StepCurve(std::move(bp), std::move(vals), 0.0);
}

}  // namespace

StepCurve betti_curve(const Barcode& b, int k) {
  std::map<double, long long> delta;
  for (const Interval& bar : b.degree(k)) {
    delta[bar.birth] += 1;
    if (!bar.essential()) delta[bar.death] -= 1;
  }
  return curve_from_events(delta);
}

std::vector<double> essential_births(const Barcode& b, int k) {
  std::vector<double> births;
  for (const Interval& bar : b.degree(k)) {
    if (bar.essential()) births.push_back(bar.birth);
  }
  std::sort(births.begin(), births.end());
  const long long expected = binomial(b.ambient_dim, k);
  if (static_cast<long long>(births.size()) != expected) {
    throw Error(ErrorCode::EssentialCountMismatch,
                fmt::format("degree {}: expected {} essential bars, got {}", k, expected, births.size()));
  }
  return births;
}

StepCurve euler_curve_from_counts(const FilteredComplex& c) {
  std::map<double, long long> delta;
  for (CellId id = 0; id < c.size(); ++id) {
    delta[c.value(id)] += (c.dim(id) % 2 == 0) ? 1 : -1;
  }
  return curve_from_events(delta);
}

long long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace hperc
