#include "hperc/continuum/cech.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include <fmt/format.h>

#include "hperc/continuum/miniball.hpp"
#include "hperc/core/error.hpp"

namespace hperc {

namespace {

// Simplices of one dimension in lexicographic order of their vertex tuples,
// each with its enclosing ball (center relative to the first vertex).
struct Level {
  std::size_t width = 0;
  std::vector<std::uint32_t> tuples;
  std::vector<CellId> ids;
  std::vector<double> centers;  // d per simplex
  std::vector<double> radii;

  std::span<const std::uint32_t> tuple(std::size_t s) const { return {tuples.data() + s * width, width}; }

  // Id of the simplex with vertex tuple `key`, if present.
  std::optional<CellId> find(std::span<const std::uint32_t> key) const {
    std::size_t lo = 0;
    std::size_t hi = ids.size();
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      const auto t = tuple(mid);
      if (std::lexicographical_compare(t.begin(), t.end(), key.begin(), key.end())) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    if (lo == ids.size() || !std::equal(key.begin(), key.end(), tuple(lo).begin())) return std::nullopt;
    return ids[lo];
  }
};

}  // namespace

double default_radius_factor(int d) { return std::pow(2.25, 1.0 / d); }

double cech_radius_cap(double n, int d, double lambda_hi, double factor) {
  if (factor <= 0.0) factor = default_radius_factor(d);
  return std::min(0.24, factor * radius_from_lambda(lambda_hi, n, d));
}

FilteredComplex cech_filtration_periodic(const TorusPointSet& pts, int max_dim, double r_max) {
  if (!(r_max < kMaxCechRadius)) {
    throw Error(ErrorCode::RadiusTooLarge,
                fmt::format("r_max = {} must stay below a quarter of the torus period", r_max));
  }
  if (r_max < 0.0) throw Error(ErrorCode::InvalidArgument, "r_max must be non-negative");
  if (max_dim < 0) throw Error(ErrorCode::InvalidArgument, "max_dim must be non-negative");

  const int d = pts.d;
  const auto ud = static_cast<std::size_t>(d);
  const std::size_t count = pts.size();
  ModelMeta meta{ModelKind::Boolean, static_cast<int>(std::lround(pts.intensity)), 0, SiteRule::None};
  FilteredComplex c(d, ParamKind::Radius, meta);
  c.reserve(count, 0);
  for (std::uint32_t v = 0; v < count; ++v) c.add_cell(0, 0.0, {});
  if (max_dim == 0 || count < 2) return c;

  // Neighbor lists: pairs within twice the radius cap.
  std::vector<std::vector<std::uint32_t>> neighbors(count);
  Level level;
  level.width = 2;
  for (std::uint32_t i = 0; i < count; ++i) {
    for (std::uint32_t j = i + 1; j < count; ++j) {
      const double dist = torus_distance(pts.point(i), pts.point(j));
      const double r = 0.5 * dist;
      if (r > r_max) continue;
      neighbors[i].push_back(j);
      level.ids.push_back(c.add_cell(1, r, {i, j}));
      level.tuples.insert(level.tuples.end(), {i, j});
      for (std::size_t a = 0; a < ud; ++a) level.centers.push_back(0.5 * wrap_delta(pts.point(i)[a], pts.point(j)[a]));
      level.radii.push_back(r);
    }
  }

  std::vector<std::uint32_t> common, tmp, tuple, facet;
  std::vector<CellId> faces;
  std::vector<double> rel, cand(ud);
  for (int dim = 2; dim <= max_dim && !level.radii.empty(); ++dim) {
    Level next;
    next.width = level.width + 1;
    for (std::size_t s = 0; s < level.radii.size(); ++s) {
      const auto prefix = level.tuple(s);
      const auto& last = neighbors[prefix.back()];
      common = last;  // neighbors of the last vertex are all larger than it
      for (std::size_t i = 0; i + 1 < prefix.size() && !common.empty(); ++i) {
        const auto& nb = neighbors[prefix[i]];
        tmp.clear();
        std::set_intersection(common.begin(), common.end(), nb.begin(), nb.end(), std::back_inserter(tmp));
        common.swap(tmp);
      }
      if (common.empty()) continue;

      const auto base = pts.point(prefix.front());
      rel.clear();
      for (std::uint32_t u : prefix) {
        const auto x = pts.point(u);
        for (std::size_t a = 0; a < ud; ++a) rel.push_back(wrap_delta(base[a], x[a]));
      }
      const std::span<const double> center(level.centers.data() + s * ud, ud);
      const double radius = level.radii[s];

      for (std::uint32_t v : common) {
        const auto x = pts.point(v);
        double sq = 0.0;
        for (std::size_t a = 0; a < ud; ++a) {
          cand[a] = wrap_delta(base[a], x[a]);
          sq += (cand[a] - center[a]) * (cand[a] - center[a]);
        }
        Ball ball;
        if (std::sqrt(sq) <= radius) {
          ball.center.assign(center.begin(), center.end());
          ball.radius = radius;
        } else {
          ball = smallest_enclosing_ball(rel, d, cand);
        }
        if (ball.radius > r_max) continue;
        tuple.assign(prefix.begin(), prefix.end());
        tuple.push_back(v);
        // Facets are the prefix and the tuples with one prefix vertex dropped.
        faces.assign(1, level.ids[s]);
        double value = std::max(ball.radius, level.radii[s]);
        bool complete = true;
        for (std::size_t skip = 0; skip < prefix.size() && complete; ++skip) {
          facet.clear();
          for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (i != skip) facet.push_back(tuple[i]);
          }
          // A facet can miss the cap by rounding when the simplex just meets it.
          const auto f = level.find(facet);
          complete = f.has_value();
          if (complete) {
            faces.push_back(*f);
            value = std::max(value, c.value(*f));
          }
        }
        if (!complete) continue;
        next.ids.push_back(c.add_cell(static_cast<int>(prefix.size()), value, faces));
        next.tuples.insert(next.tuples.end(), tuple.begin(), tuple.end());
        next.centers.insert(next.centers.end(), ball.center.begin(), ball.center.end());
        next.radii.push_back(value);
      }
    }
    level = std::move(next);
  }
  return c;
}

}  // namespace hperc
