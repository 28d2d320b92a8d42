#pragma once

#include <functional>
#include <span>
#include <vector>

namespace hperc {

inline constexpr double kRootTolerance = 1e-10;
inline constexpr int kRootScanPoints = 10000;

// Roots of f on [lo, hi]: scan `scan` equal cells for sign changes and bisect
// each bracket to width < tol. Grid points where f is exactly zero are roots.
// Two roots inside one cell with no sign change are missed. Throws
// NoBracketsFound if there is no root at all.
std::vector<double> find_zeros(const std::function<double(double)>& f, double lo, double hi,
                               double tol = kRootTolerance, int scan = kRootScanPoints);

// Zeros of a sampled curve by linear interpolation between sign changes. A run
// of exact zeros between opposite signs counts once, at its midpoint; runs
// touching either end of the grid are ignored.
std::vector<double> interpolated_zeros(std::span<const double> grid, std::span<const double> values);

}  // namespace hperc
