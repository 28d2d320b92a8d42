#pragma once

#include <span>
#include <vector>

namespace hperc {

struct Ball {
  std::vector<double> center;
  double radius = 0.0;
};

// Exact smallest enclosing ball (Welzl's recursion with affine-hull
// circumcenters) of `count` points of dimension `dim` stored row-major.
Ball smallest_enclosing_ball(std::span<const double> points, int dim);

// Same, constrained to have `boundary_point` on the sphere. Equals the
// unconstrained ball of points + boundary_point whenever boundary_point lies
// outside the ball of `points`.
Ball smallest_enclosing_ball(std::span<const double> points, int dim,
                             std::span<const double> boundary_point);

}  // namespace hperc
