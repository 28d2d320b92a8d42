#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace hperc {

struct TorusPointSet {
  int d = 0;
  double intensity = 0.0;        // Poisson mean n
  std::vector<double> coords;    // N x d, row-major, each in [0, 1)

  std::size_t size() const { return d == 0 ? 0 : coords.size() / static_cast<std::size_t>(d); }
  std::span<const double> point(std::size_t i) const {
    return std::span<const double>(coords).subspan(i * static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  }
};

// N ~ Poisson(n) points i.i.d. uniform on [0,1)^d.
TorusPointSet sample_poisson_torus(double n, int d, std::uint64_t seed);

// Volume of the unit ball in R^d.
double unit_ball_volume(int d);

// lambda = omega_d * n * r^d, and its inverse.
double lambda_from_radius(double r, double n, int d);
double radius_from_lambda(double lambda, double n, int d);

// Closed-form expected EC of the Boolean model for d = 2, 3.
double expected_ec_boolean(int d, double n, double lambda);

// Shortest displacement from a to b on the unit torus, per coordinate in
// [-1/2, 1/2).
double wrap_delta(double a, double b);
double torus_distance(std::span<const double> a, std::span<const double> b);

// CSV: header "x0,...,x{d-1}" then one row per point.
void write_points_csv(std::ostream& os, const TorusPointSet& pts);

}  // namespace hperc
