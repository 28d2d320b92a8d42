#include "hperc/site/cubical.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <fmt/format.h>

#include "hperc/core/curves.hpp"
#include "hperc/core/rng.hpp"

namespace hperc {

CubicalGrid::CubicalGrid(int d, int m) : d_(d), m_(m), n_(1) {
  if (d < 1 || d > 8) throw Error(ErrorCode::UnsupportedDimension, fmt::format("d = {}", d));
  if (m < 3) {
    throw Error(ErrorCode::SizeTooSmall,
                fmt::format("grid side {} < 3 identifies a cell with its own neighbors", m));
  }
  stride_.resize(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    stride_[static_cast<std::size_t>(i)] = n_;
    n_ *= static_cast<std::size_t>(m);
  }
}

std::size_t CubicalGrid::shift(std::size_t site, int axis, int delta) const {
  const std::size_t s = stride_[static_cast<std::size_t>(axis)];
  const std::size_t x = (site / s) % static_cast<std::size_t>(m_);
  const auto y = static_cast<std::size_t>((static_cast<long long>(x) + m_ + delta) % m_);
  return site - x * s + y * s;
}

std::vector<CellId> CubicalGrid::boundary(CellId cell) const {
  const std::size_t x = base_of(cell);
  const unsigned mask = mask_of(cell);
  std::vector<CellId> out;
  for (int i = 0; i < d_; ++i) {
    const unsigned bit = 1u << i;
    if (!(mask & bit)) continue;
    out.push_back(cell_id(x, mask ^ bit));
    out.push_back(cell_id(shift(x, i, +1), mask ^ bit));
  }
  return out;
}

std::vector<std::size_t> CubicalGrid::incident_sites(CellId cell) const {
  const std::size_t x = base_of(cell);
  const unsigned free = full_mask() & ~mask_of(cell);
  std::vector<std::size_t> out;
  // Enumerate subsets S of the free axes; shift by -1 along S.
  for (unsigned s = free;; s = (s - 1) & free) {
    std::size_t y = x;
    for (int i = 0; i < d_; ++i) {
      if (s & (1u << i)) y = shift(y, i, -1);
    }
    out.push_back(y);
    if (s == 0) break;
  }
  return out;
}

std::vector<std::size_t> CubicalGrid::vertices(CellId cell) const {
  const std::size_t x = base_of(cell);
  const unsigned mask = mask_of(cell);
  std::vector<std::size_t> out;
  for (unsigned s = mask;; s = (s - 1) & mask) {
    std::size_t y = x;
    for (int i = 0; i < d_; ++i) {
      if (s & (1u << i)) y = shift(y, i, +1);
    }
    out.push_back(y);
    if (s == 0) break;
  }
  return out;
}

FilteredComplex gen_cubical_complex(int d, int m, std::uint64_t seed) {
  if (d < 2 || d > 4) throw Error(ErrorCode::UnsupportedDimension, fmt::format("cubical model needs d in {{2,3,4}}, got {}", d));
  const CubicalGrid grid(d, m);
  Rng rng(seed);
  std::vector<double> site_value(grid.sites());
  for (double& u : site_value) u = uniform01(rng);

  ModelMeta meta{ModelKind::Cubical, m, seed, SiteRule::TopCellsMin};
  FilteredComplex c(d, ParamKind::SiteProbability, meta);
  c.reserve(grid.cells(), grid.cells() * static_cast<std::size_t>(d));
  for (CellId id = 0; id < grid.cells(); ++id) {
    double v = 1.0;
    for (std::size_t s : grid.incident_sites(id)) v = std::min(v, site_value[s]);
    const auto bd = grid.boundary(id);
    c.add_cell(std::popcount(grid.mask_of(id)), v, bd);
  }
  return c;
}

double expected_ec_cubical(int d, double n, double p) {
  double sum = 0.0;
  for (int k = 0; k <= d; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const double incident = std::ldexp(1.0, d - k);
    sum += sign * static_cast<double>(binomial(d, k)) * (1.0 - std::pow(1.0 - p, incident));
  }
  return n * sum;
}

}  // namespace hperc
