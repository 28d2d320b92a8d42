#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "hperc/core/complex.hpp"
#include "hperc/core/curves.hpp"
#include "hperc/core/persistence.hpp"

namespace hperc::test {

inline std::set<CellId> vertex_set(const FilteredComplex& c, CellId id) {
  if (c.dim(id) == 0) return {id};
  std::set<CellId> out;
  for (CellId f : c.boundary(id)) {
    const auto s = vertex_set(c, f);
    out.insert(s.begin(), s.end());
  }
  return out;
}

// Triangle boundary: three vertices at 0, three edges at 1.
inline FilteredComplex cycle_graph() {
  FilteredComplex c(2, ParamKind::Level);
  for (int i = 0; i < 3; ++i) c.add_cell(0, 0.0, {});
  c.add_cell(1, 1.0, {0, 1});
  c.add_cell(1, 1.0, {1, 2});
  c.add_cell(1, 1.0, {0, 2});
  return c;
}

// Rank over GF(2) of a dense 0/1 matrix given as rows of 64-bit words.
inline int gf2_rank(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols) {
  int rank = 0;
  const std::size_t words = (cols + 63) / 64;
  std::size_t r0 = 0;
  for (std::size_t col = 0; col < cols && r0 < rows.size(); ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t piv = r0;
    while (piv < rows.size() && !(rows[piv][w] & bit)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r0]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != r0 && (rows[r][w] & bit)) {
        for (std::size_t k = 0; k < words; ++k) rows[r][k] ^= rows[r0][k];
      }
    }
    ++r0;
    ++rank;
  }
  return rank;
}

// Betti numbers of the subcomplex {value <= t} by ranks of boundary maps.
inline std::vector<int> betti_by_rank(const FilteredComplex& c, double t) {
  const int top = c.top_dim();
  std::vector<std::vector<CellId>> cells(static_cast<std::size_t>(top + 1));
  std::vector<long> local(c.size(), -1);
  for (CellId id = 0; id < c.size(); ++id) {
    if (c.value(id) <= t) {
      auto& v = cells[static_cast<std::size_t>(c.dim(id))];
      local[id] = static_cast<long>(v.size());
      v.push_back(id);
    }
  }
  std::vector<int> rank(static_cast<std::size_t>(top + 2), 0);
  for (int k = 1; k <= top; ++k) {
    const auto& rows_cells = cells[static_cast<std::size_t>(k)];
    const std::size_t cols = cells[static_cast<std::size_t>(k - 1)].size();
    std::vector<std::vector<std::uint64_t>> rows(rows_cells.size(), std::vector<std::uint64_t>((cols + 63) / 64));
    for (std::size_t r = 0; r < rows_cells.size(); ++r) {
      for (CellId f : c.boundary(rows_cells[r])) {
        const auto j = static_cast<std::size_t>(local[f]);
        rows[r][j / 64] ^= std::uint64_t{1} << (j % 64);
      }
    }
    rank[static_cast<std::size_t>(k)] = gf2_rank(std::move(rows), cols);
  }
  std::vector<int> betti(static_cast<std::size_t>(top + 1));
  for (int k = 0; k <= top; ++k) {
    betti[static_cast<std::size_t>(k)] = static_cast<int>(cells[static_cast<std::size_t>(k)].size()) -
                                         rank[static_cast<std::size_t>(k)] - rank[static_cast<std::size_t>(k + 1)];
  }
  return betti;
}

inline std::vector<double> distinct_values(const FilteredComplex& c) {
  std::set<double> s;
  for (CellId id = 0; id < c.size(); ++id) s.insert(c.value(id));
  return {s.begin(), s.end()};
}

}  // namespace hperc::test
