#include "hperc/continuum/miniball.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "hperc/core/error.hpp"

namespace hperc {

namespace {

constexpr int kMaxDim = 16;
using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxDim, 1>;
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxDim, kMaxDim>;

// Smallest ball with all support points on its boundary: the circumcenter
// within their affine hull. Radius is +inf for affinely dependent supports.
void circumball(const std::vector<Vec>& s, Vec& center, double& radius) {
  const Vec& p0 = s.front();
  const auto k = static_cast<Eigen::Index>(s.size()) - 1;
  if (k == 0) {
    center = p0;
    radius = 0.0;
    return;
  }
  Mat a(k, p0.size());
  Vec rhs(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    a.row(i) = (s[static_cast<std::size_t>(i + 1)] - p0).transpose();
    rhs(i) = a.row(i).squaredNorm();
  }
  const Mat gram = 2.0 * a * a.transpose();
  Eigen::FullPivLU<Mat> lu(gram);
  if (lu.rank() < k) {
    center = p0;
    radius = std::numeric_limits<double>::infinity();
    return;
  }
  const Vec lambda = lu.solve(rhs);
  center = p0 + a.transpose() * lambda;
  radius = 0.0;
  for (const Vec& q : s) radius = std::max(radius, (q - center).norm());
}

bool contains(const Vec& center, double radius, const Vec& p) {
  const double slack = 1e-12 * std::max(1.0, radius);
  return (p - center).norm() <= radius + slack;
}

class Welzl {
 public:
  Welzl(const std::vector<Vec>& pts, int dim) : pts_(pts), dim_(dim) { support_.reserve(static_cast<std::size_t>(dim) + 2); }

  void force(const Vec& p) { support_.push_back(p); }

  void run(std::size_t count, Vec& center, double& radius) {
    if (count == 0 || static_cast<int>(support_.size()) == dim_ + 1) {
      if (support_.empty()) {
        center = Vec::Zero(dim_);
        radius = -1.0;
        return;
      }
      circumball(support_, center, radius);
      return;
    }
    const Vec& p = pts_[count - 1];
    run(count - 1, center, radius);
    if (radius >= 0.0 && contains(center, radius, p)) return;
    support_.push_back(p);
    run(count - 1, center, radius);
    support_.pop_back();
  }

 private:
  const std::vector<Vec>& pts_;
  int dim_;
  std::vector<Vec> support_;
};

std::vector<Vec> unpack(std::span<const double> points, int dim) {
  if (dim < 1 || dim > kMaxDim) throw Error(ErrorCode::InvalidArgument, "ball dimension must be in [1, 16]");
  const std::size_t count = points.size() / static_cast<std::size_t>(dim);
  std::vector<Vec> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    pts.push_back(Eigen::Map<const Vec>(points.data() + i * static_cast<std::size_t>(dim), dim));
  }
  return pts;
}

Ball pack(const Vec& center, double radius) {
  return {std::vector<double>(center.data(), center.data() + center.size()), radius};
}

}  // namespace

Ball smallest_enclosing_ball(std::span<const double> points, int dim) {
  const auto pts = unpack(points, dim);
  if (pts.empty()) return {};
  Vec center;
  double radius = 0.0;
  Welzl(pts, dim).run(pts.size(), center, radius);
  return pack(center, radius);
}

Ball smallest_enclosing_ball(std::span<const double> points, int dim,
                             std::span<const double> boundary_point) {
  const auto pts = unpack(points, dim);
  Welzl welzl(pts, dim);
  welzl.force(Eigen::Map<const Vec>(boundary_point.data(), dim));
  Vec center;
  double radius = 0.0;
  welzl.run(pts.size(), center, radius);
  return pack(center, radius);
}

}  // namespace hperc
