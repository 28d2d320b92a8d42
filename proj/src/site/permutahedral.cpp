#include "hperc/site/permutahedral.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <fmt/format.h>

#include "hperc/core/rng.hpp"
#include "hperc/core/simplex_index.hpp"

namespace hperc {

namespace {

long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

void check_dims(int d, int m) {
  if (d < 2 || d > 4) {
    throw Error(ErrorCode::UnsupportedDimension, fmt::format("permutahedral model needs d in {{2,3,4}}, got {}", d));
  }
  if (m < 3) throw Error(ErrorCode::SizeTooSmall, fmt::format("lattice side {} < 3", m));
}

// Squared norm of sum_i c_i b_i, scaled by (d + 1) to stay integral.
long long scaled_norm2(const std::vector<int>& c, int d) {
  long long sq = 0, sum = 0;
  for (int x : c) {
    sq += static_cast<long long>(x) * x;
    sum += x;
  }
  return (d + 1) * sq - sum * sum;
}

// Offsets of the shortest lattice vectors, taken shell by shell until the
// facet count 2^(d+1) - 2 of the Voronoi permutahedron is reached.
std::vector<std::vector<int>> facet_offsets(int d) {
  const std::size_t target = (std::size_t{1} << (d + 1)) - 2;
  std::map<long long, std::vector<std::vector<int>>> shells;
  std::vector<int> c(static_cast<std::size_t>(d), -2);
  while (true) {
    if (std::any_of(c.begin(), c.end(), [](int x) { return x != 0; })) {
      shells[scaled_norm2(c, d)].push_back(c);
    }
    int i = 0;
    while (i < d && c[static_cast<std::size_t>(i)] == 2) c[static_cast<std::size_t>(i++)] = -2;
    if (i == d) break;
    ++c[static_cast<std::size_t>(i)];
  }
  std::vector<std::vector<int>> out;
  for (auto& [norm, vecs] : shells) {
    if (out.size() >= target) break;
    out.insert(out.end(), vecs.begin(), vecs.end());
  }
  if (out.size() != target) {
    throw Error(ErrorCode::CliqueCountMismatch,
                fmt::format("neighbor shells give {} offsets, expected {}", out.size(), target));
  }
  return out;
}

}  // namespace

std::vector<int> PermLattice::coords(std::size_t site) const {
  std::vector<int> c(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    c[static_cast<std::size_t>(i)] = static_cast<int>(site % static_cast<std::size_t>(m));
    site /= static_cast<std::size_t>(m);
  }
  return c;
}

std::size_t PermLattice::index(const std::vector<int>& c) const {
  std::size_t idx = 0;
  for (int i = d - 1; i >= 0; --i) {
    const int r = ((c[static_cast<std::size_t>(i)] % m) + m) % m;
    idx = idx * static_cast<std::size_t>(m) + static_cast<std::size_t>(r);
  }
  return idx;
}

PermLattice gen_perm_lattice(int d, int m) {
  check_dims(d, m);
  PermLattice lat;
  lat.d = d;
  lat.m = m;
  lat.n = 1;
  for (int i = 0; i < d; ++i) lat.n *= static_cast<std::size_t>(m);

  Eigen::MatrixXd gram = Eigen::MatrixXd::Identity(d, d);
  gram.array() -= 1.0 / (d + 1);
  const Eigen::MatrixXd chol = gram.llt().matrixL();
  lat.basis.assign(static_cast<std::size_t>(d), std::vector<double>(static_cast<std::size_t>(d), 0.0));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) lat.basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = chol(i, j);

  lat.offsets = facet_offsets(d);
  lat.neighbors.resize(lat.n);
  std::vector<int> shifted(static_cast<std::size_t>(d));
  for (std::size_t s = 0; s < lat.n; ++s) {
    const auto c = lat.coords(s);
    auto& nb = lat.neighbors[s];
    for (const auto& off : lat.offsets) {
      for (int i = 0; i < d; ++i) {
        shifted[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)] + off[static_cast<std::size_t>(i)];
      }
      nb.push_back(static_cast<std::uint32_t>(lat.index(shifted)));
    }
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return lat;
}

FilteredComplex gen_perm_complex(int d, int m, std::uint64_t seed) {
  const PermLattice lat = gen_perm_lattice(d, m);
  Rng rng(seed);
  std::vector<double> site_value(lat.n);
  for (double& u : site_value) u = uniform01(rng);

  ModelMeta meta{ModelKind::Permutahedral, m, seed, SiteRule::VerticesMax};
  FilteredComplex c(d, ParamKind::SiteProbability, meta);
  SimplexIndex index(c);

  // Cliques level by level; each k-clique extends its (k-1)-prefix by a
  // larger common neighbor.
  std::vector<std::uint32_t> level;  // flat tuples of the current dimension
  for (std::uint32_t v = 0; v < lat.n; ++v) {
    index.add(std::span<const std::uint32_t>(&v, 1), site_value[v]);
    level.push_back(v);
  }
  std::vector<std::uint32_t> common, tmp, tuple;
  for (int k = 1; k <= d; ++k) {
    const auto width = static_cast<std::size_t>(k);
    std::vector<std::uint32_t> next;
    std::size_t count = 0;
    for (std::size_t t = 0; t + width <= level.size(); t += width) {
      const std::span<const std::uint32_t> prefix(level.data() + t, width);
      const auto& first = lat.neighbors[prefix.back()];
      common.assign(std::upper_bound(first.begin(), first.end(), prefix.back()), first.end());
      for (std::size_t i = 0; i + 1 < width && !common.empty(); ++i) {
        const auto& nb = lat.neighbors[prefix[i]];
        tmp.clear();
        std::set_intersection(common.begin(), common.end(), nb.begin(), nb.end(), std::back_inserter(tmp));
        common.swap(tmp);
      }
      for (std::uint32_t v : common) {
        tuple.assign(prefix.begin(), prefix.end());
        tuple.push_back(v);
        double value = 0.0;
        for (std::uint32_t u : tuple) value = std::max(value, site_value[u]);
        index.add(tuple, value);
        next.insert(next.end(), tuple.begin(), tuple.end());
        ++count;
      }
    }
    const long long expected = perm_simplex_count(d, static_cast<long long>(lat.n), k);
    if (static_cast<long long>(count) != expected) {
      throw Error(ErrorCode::CliqueCountMismatch,
                  fmt::format("d={} m={}: {} simplices of dim {}, expected {}", d, m, count, k, expected));
    }
    level.swap(next);
  }
  return c;
}

long long stirling2(int n, int k) {
  if (n < 0 || k < 0) return 0;
  std::vector<std::vector<long long>> s(static_cast<std::size_t>(n + 1),
                                        std::vector<long long>(static_cast<std::size_t>(std::max(n, k) + 1), 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j)
      s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          j * s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] +
          s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  return k > n ? 0 : s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

long long perm_face_count(int d, long long n, int k) {
  if (k < 0 || k > d) throw Error(ErrorCode::InvalidArgument, fmt::format("face dimension {} outside [0, {}]", k, d));
  const int parts = d + 1 - k;
  return n * factorial(parts) * stirling2(d + 1, parts) / parts;
}

long long perm_simplex_count(int d, long long n, int k) {
  if (k < 0 || k > d) return 0;
  return n * factorial(k) * stirling2(d + 1, k + 1);
}

double expected_ec_perm(int d, double n, double p) {
  double sum = 0.0;
  for (int k = 0; k <= d; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const auto faces_per_site = static_cast<double>(perm_face_count(d, 1, k));
    sum += sign * faces_per_site * (1.0 - std::pow(1.0 - p, d + 1 - k));
  }
  return n * sum;
}

}  // namespace hperc
