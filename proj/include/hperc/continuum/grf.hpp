#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hperc/core/complex.hpp"

namespace hperc {

struct GrfField {
  int d = 0;
  int g = 0;             // grid points per axis
  double sigma2 = 0.0;   // kernel bandwidth
  std::uint64_t seed = 0;
  std::vector<double> values;  // g^d, axis 0 fastest
};

// Stationary zero-mean unit-variance field on the periodic grid with
// covariance exp(-dist^2 / sigma2), dist the wrapped distance, by circulant
// embedding. Throws SpectrumNotPSD if the kernel spectrum has an eigenvalue
// below -1e-10.
GrfField sample_grf_torus(int d, int g, double sigma2, std::uint64_t seed);

// Periodic cubical complex with the field on the vertices; every cell takes
// the max over its vertices.
FilteredComplex sublevel_cubical_filtration(const GrfField& f);

// H_k(x) = k! sum_j (-1)^j x^(k-2j) / (j! (k-2j)! 2^j).
double hermite(int k, double x);

double expected_ec_grf(int d, double alpha);

// Header line "d,g,sigma2,seed", one line of those values, then g^(d-1) rows
// of g values each.
void write_field_csv(std::ostream& os, const GrfField& f);

}  // namespace hperc
