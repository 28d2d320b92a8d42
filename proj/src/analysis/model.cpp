#include "hperc/analysis/model.hpp"

#include <cmath>

#include <fmt/format.h>

#include "hperc/continuum/cech.hpp"
#include "hperc/continuum/grf.hpp"
#include "hperc/continuum/poisson.hpp"
#include "hperc/core/error.hpp"
#include "hperc/site/cubical.hpp"
#include "hperc/site/permutahedral.hpp"

namespace hperc {

namespace {

int side_of(const ModelSpec& spec) {
  const double m = std::round(spec.size);
  if (m != spec.size || m < 1.0 || m > 1e6) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("{} size must be a positive integer, got {}",
                                                        to_string(spec.model), spec.size));
  }
  return static_cast<int>(m);
}

}  // namespace

double effective_lambda_hi(const ModelSpec& spec) {
  return spec.lambda_hi > 0.0 ? spec.lambda_hi : 2.0 * spec.d;
}

double cech_r_max(const ModelSpec& spec) {
  return cech_radius_cap(spec.size, spec.d, effective_lambda_hi(spec), spec.radius_factor);
}

double site_count(const ModelSpec& spec) {
  if (spec.model == ModelKind::Boolean) return spec.size;
  return std::pow(spec.size, spec.d);
}

void check_spec(const ModelSpec& spec) {
  if (spec.d < 2 || spec.d > 4) {
    throw Error(ErrorCode::UnsupportedDimension, fmt::format("d must be 2, 3 or 4, got {}", spec.d));
  }
  switch (spec.model) {
    case ModelKind::Cubical:
      if (side_of(spec) < 3) throw Error(ErrorCode::SizeTooSmall, "cubical side must be at least 3");
      break;
    case ModelKind::Permutahedral:
      if (side_of(spec) < 4) throw Error(ErrorCode::SizeTooSmall, "perm side must be at least 4");
      break;
    case ModelKind::Boolean:
      if (!(spec.size > 0.0)) throw Error(ErrorCode::InvalidArgument, "boolean intensity must be positive");
      if (spec.radius_factor < 0.0) throw Error(ErrorCode::InvalidArgument, "radius_factor must be non-negative");
      if (spec.lambda_hi < 0.0) throw Error(ErrorCode::InvalidArgument, "lambda_hi must be non-negative");
      break;
    case ModelKind::Grf:
      if (side_of(spec) < 3) throw Error(ErrorCode::SizeTooSmall, "grf grid must be at least 3");
      if (!(spec.sigma2 > 0.0)) throw Error(ErrorCode::InvalidArgument, "sigma2 must be positive");
      break;
    case ModelKind::Custom:
      throw Error(ErrorCode::InvalidArgument, "custom complexes have no generator");
  }
}

FilteredComplex generate_complex(const ModelSpec& spec, std::uint64_t seed) {
  check_spec(spec);
  switch (spec.model) {
    case ModelKind::Cubical:
      return gen_cubical_complex(spec.d, side_of(spec), seed);
    case ModelKind::Permutahedral:
      return gen_perm_complex(spec.d, side_of(spec), seed);
    case ModelKind::Boolean: {
      const int max_dim = spec.cech_max_dim > 0 ? spec.cech_max_dim : spec.d;
      return cech_filtration_periodic(sample_poisson_torus(spec.size, spec.d, seed), max_dim, cech_r_max(spec));
    }
    case ModelKind::Grf:
      return sublevel_cubical_filtration(sample_grf_torus(spec.d, side_of(spec), spec.sigma2, seed));
    case ModelKind::Custom:
      break;
  }
  throw Error(ErrorCode::InvalidArgument, "custom complexes have no generator");
}

double to_parameter(const ModelSpec& spec, double filtration_value) {
  if (spec.model == ModelKind::Boolean) return lambda_from_radius(filtration_value, spec.size, spec.d);
  return filtration_value;
}

double to_filtration_value(const ModelSpec& spec, double parameter) {
  if (spec.model == ModelKind::Boolean) return radius_from_lambda(parameter, spec.size, spec.d);
  return parameter;
}

std::pair<double, double> parameter_domain(const ModelSpec& spec) {
  switch (spec.model) {
    case ModelKind::Boolean:
      return {0.0, has_analytic_ec(spec) ? 20.0 : effective_lambda_hi(spec)};
    case ModelKind::Grf:
      return {-5.0, 5.0};
    default:
      return {0.0, 1.0};
  }
}

bool has_analytic_ec(const ModelSpec& spec) {
  return spec.model != ModelKind::Custom && !(spec.model == ModelKind::Boolean && spec.d >= 4);
}

double expected_ec(const ModelSpec& spec, double parameter) {
  switch (spec.model) {
    case ModelKind::Cubical:
      return expected_ec_cubical(spec.d, site_count(spec), parameter);
    case ModelKind::Permutahedral:
      return expected_ec_perm(spec.d, site_count(spec), parameter);
    case ModelKind::Boolean:
      return expected_ec_boolean(spec.d, spec.size, parameter);
    case ModelKind::Grf:
      return expected_ec_grf(spec.d, parameter);
    case ModelKind::Custom:
      break;
  }
  throw Error(ErrorCode::InvalidArgument, "custom complexes have no expected EC");
}

}  // namespace hperc
