#pragma once

#include <cstdint>
#include <utility>

#include "hperc/core/complex.hpp"

namespace hperc {

// A model instance. `size` is the side m for cubical and perm, the Poisson
// intensity n for boolean, and the grid side g for grf.
struct ModelSpec {
  ModelKind model = ModelKind::Cubical;
  int d = 2;
  double size = 0.0;
  double sigma2 = 1e-3;
  double lambda_hi = 0.0;      // boolean truncation ceiling; 0 means 2d
  double radius_factor = 0.0;  // boolean r_max = factor * r(lambda_hi); 0 means default
  int cech_max_dim = 0;        // 0 means d
};

double effective_lambda_hi(const ModelSpec& spec);
double cech_r_max(const ModelSpec& spec);

// Number of sites n entering the expected EC (m^d, intensity, or g^d).
double site_count(const ModelSpec& spec);

// Throws InvalidArgument or the generator's own error for unusable specs.
void check_spec(const ModelSpec& spec);

FilteredComplex generate_complex(const ModelSpec& spec, std::uint64_t seed);

// Filtration values are p, r or alpha; the reported parameter is p, lambda or
// alpha.
double to_parameter(const ModelSpec& spec, double filtration_value);
double to_filtration_value(const ModelSpec& spec, double parameter);

// Parameter range searched for EC zeros.
std::pair<double, double> parameter_domain(const ModelSpec& spec);

bool has_analytic_ec(const ModelSpec& spec);
double expected_ec(const ModelSpec& spec, double parameter);

}  // namespace hperc
