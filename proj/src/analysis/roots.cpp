#include "hperc/analysis/roots.hpp"

#include <cmath>

#include <fmt/format.h>

#include "hperc/core/error.hpp"

namespace hperc {

namespace {

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

double bisect(const std::function<double(double)>& f, double a, double b, int sa, double tol) {
  while (b - a >= tol) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    const int sm = sign_of(f(mid));
    if (sm == 0) return mid;
    if (sm == sa) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::vector<double> find_zeros(const std::function<double(double)>& f, double lo, double hi, double tol,
                               int scan) {
  if (!(hi > lo) || !(tol > 0.0) || scan < 1) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("bad root search on [{}, {}] tol {}", lo, hi, tol));
  }
  std::vector<double> roots;
  auto at = [&](int i) { return i == scan ? hi : lo + (hi - lo) * static_cast<double>(i) / scan; };
  double x0 = at(0);
  int s0 = sign_of(f(x0));
  if (s0 == 0) roots.push_back(x0);
  for (int i = 1; i <= scan; ++i) {
    const double x1 = at(i);
    const int s1 = sign_of(f(x1));
    if (s1 == 0) {
      roots.push_back(x1);
    } else if (s0 != 0 && s0 != s1) {
      roots.push_back(bisect(f, x0, x1, s0, tol));
    }
    x0 = x1;
    s0 = s1;
  }
  if (roots.empty()) throw Error(ErrorCode::NoBracketsFound, fmt::format("no sign change on [{}, {}]", lo, hi));
  return roots;
}

std::vector<double> interpolated_zeros(std::span<const double> grid, std::span<const double> values) {
  if (grid.size() != values.size()) {
    throw Error(ErrorCode::InvalidArgument, "grid and values differ in length");
  }
  std::vector<double> zeros;
  const std::size_t n = grid.size();
  std::size_t i = 0;
  while (i < n && values[i] == 0.0) ++i;
  while (i < n) {
    std::size_t j = i + 1;
    while (j < n && values[j] == 0.0) ++j;
    if (j == n) break;
    if (sign_of(values[i]) != sign_of(values[j])) {
      if (j == i + 1) {
        const double t = values[i] / (values[i] - values[j]);
        zeros.push_back(grid[i] + t * (grid[j] - grid[i]));
      } else {
        zeros.push_back(0.5 * (grid[i + 1] + grid[j - 1]));
      }
    }
    i = j;
  }
  return zeros;
}

}  // namespace hperc
