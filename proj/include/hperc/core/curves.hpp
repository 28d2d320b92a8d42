#pragma once

#include <span>
#include <vector>

#include "hperc/core/complex.hpp"
#include "hperc/core/persistence.hpp"

namespace hperc {

// Right-continuous piecewise-constant function. `initial` holds for t below
// the first breakpoint; values[i] holds on [breakpoints[i], breakpoints[i+1]).
class StepCurve {
 public:
  StepCurve() = default;
  StepCurve(std::vector<double> breakpoints, std::vector<double> values, double initial = 0.0);

  double operator()(double t) const;

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& values() const { return values_; }
  double initial() const { return initial_; }
  bool empty() const { return breakpoints_.empty(); }

  // Evaluate at each t of a grid.
  std::vector<double> sample(std::span<const double> grid) const;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
  double initial_ = 0.0;
};

// beta_k(t) = #{degree-k intervals with birth <= t < death}.
StepCurve betti_curve(const Barcode& b, int k);

// Sorted births of the infinite degree-k intervals. Throws
// EssentialCountMismatch unless there are exactly binomial(d, k).
std::vector<double> essential_births(const Barcode& b, int k);

// chi(t) = sum_k (-1)^k #{k-cells with value <= t}; one breakpoint per
// distinct cell value.
StepCurve euler_curve_from_counts(const FilteredComplex& c);

long long binomial(int n, int k);

}  // namespace hperc
