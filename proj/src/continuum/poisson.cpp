#include "hperc/continuum/poisson.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <random>

#include <fmt/format.h>

#include "hperc/core/error.hpp"
#include "hperc/core/rng.hpp"

namespace hperc {

TorusPointSet sample_poisson_torus(double n, int d, std::uint64_t seed) {
  if (!(n > 0.0)) throw Error(ErrorCode::InvalidArgument, fmt::format("intensity must be positive, got {}", n));
  if (d < 1) throw Error(ErrorCode::UnsupportedDimension, fmt::format("d = {}", d));
  Rng rng(seed);
  std::poisson_distribution<long long> count(n);
  const auto total = static_cast<std::size_t>(count(rng));
  TorusPointSet pts;
  pts.d = d;
  pts.intensity = n;
  pts.coords.resize(total * static_cast<std::size_t>(d));
  for (double& x : pts.coords) x = uniform01(rng);
  return pts;
}

double unit_ball_volume(int d) {
  switch (d) {
    case 1: return 2.0;
    case 2: return std::numbers::pi;
    case 3: return 4.0 * std::numbers::pi / 3.0;
    case 4: return std::numbers::pi * std::numbers::pi / 2.0;
    default: return std::pow(std::numbers::pi, d / 2.0) / std::tgamma(d / 2.0 + 1.0);
  }
}

double lambda_from_radius(double r, double n, int d) {
  return unit_ball_volume(d) * n * std::pow(r, d);
}

double radius_from_lambda(double lambda, double n, int d) {
  return std::pow(lambda / (unit_ball_volume(d) * n), 1.0 / d);
}

double expected_ec_boolean(int d, double n, double lambda) {
  const double decay = n * std::exp(-lambda);
  switch (d) {
    case 2: return decay * (1.0 - lambda);
    case 3: return decay * (1.0 - 3.0 * lambda + 3.0 / 32.0 * std::numbers::pi * std::numbers::pi * lambda * lambda);
    default:
      throw Error(ErrorCode::UnsupportedDimension,
                  fmt::format("no closed-form Boolean EC for d = {}; use the Monte Carlo estimate", d));
  }
}

double wrap_delta(double a, double b) {
  double delta = b - a;
  delta -= std::floor(delta + 0.5);
  return delta;
}

double torus_distance(std::span<const double> a, std::span<const double> b) {
  double sq = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double delta = wrap_delta(a[i], b[i]);
    sq += delta * delta;
  }
  return std::sqrt(sq);
}

void write_points_csv(std::ostream& os, const TorusPointSet& pts) {
  std::string line;
  for (int i = 0; i < pts.d; ++i) line += fmt::format("{}x{}", i == 0 ? "" : ",", i);
  os << line << '\n';
  for (std::size_t p = 0; p < pts.size(); ++p) {
    line.clear();
    const auto x = pts.point(p);
    for (std::size_t i = 0; i < x.size(); ++i) line += fmt::format("{}{:.17g}", i == 0 ? "" : ",", x[i]);
    os << line << '\n';
  }
}

}  // namespace hperc
