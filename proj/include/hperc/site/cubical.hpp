#pragma once

#include <cstdint>
#include <vector>

#include "hperc/core/complex.hpp"

namespace hperc {

// Periodic cubical cell structure on an m^d grid. A cell is a base vertex x
// in Z_m^d plus a direction mask; it spans [x_i, x_i + 1] along each masked
// axis. Cell id = linear(x) * 2^d + mask, with axis 0 varying fastest in
// linear(x). Every k-face is shared by 2^(d-k) top cells.
class CubicalGrid {
 public:
  CubicalGrid(int d, int m);

  int dim() const { return d_; }
  int side() const { return m_; }
  std::size_t sites() const { return n_; }
  std::size_t cells() const { return n_ << d_; }

  CellId cell_id(std::size_t site, unsigned mask) const { return static_cast<CellId>((site << d_) | mask); }
  std::size_t base_of(CellId cell) const { return cell >> d_; }
  unsigned mask_of(CellId cell) const { return cell & ((1u << d_) - 1u); }
  unsigned full_mask() const { return (1u << d_) - 1u; }

  // Site index shifted by `delta` (each entry in {-1, 0, +1}) along axis.
  std::size_t shift(std::size_t site, int axis, int delta) const;

  std::vector<CellId> boundary(CellId cell) const;
  // Top cells containing `cell`.
  std::vector<std::size_t> incident_sites(CellId cell) const;
  // Vertices (as site indices) of `cell`.
  std::vector<std::size_t> vertices(CellId cell) const;

 private:
  int d_;
  int m_;
  std::size_t n_;
  std::vector<std::size_t> stride_;
};

// Random cubical complex Q(n, p) as a filtration in p: site i opens at U_i and
// every face enters with its first incident site.
FilteredComplex gen_cubical_complex(int d, int m, std::uint64_t seed);

// Expected EC of Q(n, p).
double expected_ec_cubical(int d, double n, double p);

}  // namespace hperc
