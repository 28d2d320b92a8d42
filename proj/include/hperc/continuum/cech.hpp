#pragma once

#include "hperc/continuum/poisson.hpp"
#include "hperc/core/complex.hpp"

namespace hperc {

inline constexpr double kMaxCechRadius = 0.25;

// Cech filtration of balls around the points under the periodic metric, in
// radius units. A simplex's value is the radius of the smallest ball enclosing
// its vertices, unwrapped to the copies nearest its first vertex. Simplices
// above r_max or above dimension max_dim are omitted; pass a large max_dim
// for the full nerve. Requires r_max < 1/4 (else RadiusTooLarge).
FilteredComplex cech_filtration_periodic(const TorusPointSet& pts, int max_dim, double r_max);

// (9/4)^(1/d): the cap then sits at lambda = 2.25 * lambda_hi.
double default_radius_factor(int d);

// Truncation radius min(0.24, factor * radius_from_lambda(lambda_hi)); a
// factor <= 0 selects default_radius_factor(d).
double cech_radius_cap(double n, int d, double lambda_hi, double factor = 0.0);

}  // namespace hperc
