#include "hperc/core/persistence.hpp"

#include <algorithm>
#include <cstdint>

#include <fmt/format.h>

namespace hperc {

namespace {

using Index = std::uint32_t;
constexpr Index kNone = static_cast<Index>(-1);

// GF(2) column addition of sorted index lists.
void add_column(std::vector<Index>& col, const std::vector<Index>& other, std::vector<Index>& scratch) {
  scratch.clear();
  std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                std::back_inserter(scratch));
  col.swap(scratch);
}

}  // namespace

std::span<const Interval> Barcode::degree(int k) const {
  if (k < 0 || k >= static_cast<int>(intervals.size())) return {};
  return intervals[static_cast<std::size_t>(k)];
}

std::size_t Barcode::essential_count(int k) const {
  const auto bars = degree(k);
  return static_cast<std::size_t>(
      std::count_if(bars.begin(), bars.end(), [](const Interval& i) { return i.essential(); }));
}

Barcode compute_persistence(const FilteredComplex& c, int max_degree, PersistenceOptions options) {
  require_valid(c);
  if (max_degree < 0) throw Error(ErrorCode::InvalidArgument, "max_degree must be >= 0");
  if (c.ambient_dim() > 0 && max_degree > c.ambient_dim()) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("max_degree {} exceeds ambient dimension {}", max_degree, c.ambient_dim()));
  }

  const std::vector<CellId> order = c.filtration_order();
  const std::size_t n = order.size();
  std::vector<Index> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = static_cast<Index>(i);

  const int top = std::min(max_degree + 1, c.top_dim());
  // Columns grouped by dimension, ascending in filtration order.
  std::vector<std::vector<Index>> by_dim(static_cast<std::size_t>(std::max(top + 1, 1)));
  for (std::size_t i = 0; i < n; ++i) {
    const int dim = c.dim(order[i]);
    if (dim <= top) by_dim[static_cast<std::size_t>(dim)].push_back(static_cast<Index>(i));
  }

  // killer[i]: position of the cell that kills the class born at i.
  std::vector<Index> killer(n, kNone);
  std::vector<char> is_death(n, 0);
  std::vector<Index> col, scratch;
  std::vector<std::vector<Index>> reduced(n);

  std::vector<Index> pivot_of(n, kNone);  // row -> column whose lowest one is row
  std::vector<char> cleared(n, 0);
  auto reduce_dimension = [&](int dim) {
    for (Index j : by_dim[static_cast<std::size_t>(dim)]) {
      if (cleared[j]) continue;
      col.clear();
      for (CellId f : c.boundary(order[j])) col.push_back(position[f]);
      std::sort(col.begin(), col.end());
      while (!col.empty()) {
        const Index other = pivot_of[col.back()];
        if (other == kNone) break;
        add_column(col, reduced[other], scratch);
      }
      if (col.empty()) continue;
      const Index low = col.back();
      pivot_of[low] = j;
      killer[low] = j;
      is_death[j] = 1;
      reduced[j] = col;
      if (options.clearing) cleared[low] = 1;
    }
  };
  if (options.clearing) {
    for (int dim = top; dim >= 1; --dim) reduce_dimension(dim);
  } else {
    for (int dim = 1; dim <= top; ++dim) reduce_dimension(dim);
  }

  Barcode bc;
  bc.ambient_dim = c.ambient_dim();
  bc.max_degree = max_degree;
  bc.intervals.assign(static_cast<std::size_t>(max_degree + 1), {});
  bc.zero_length.assign(static_cast<std::size_t>(max_degree + 1), 0);

  for (std::size_t i = 0; i < n; ++i) {
    const CellId cell = order[i];
    const int dim = c.dim(cell);
    if (dim > max_degree) continue;
    const auto k = static_cast<std::size_t>(dim);
    if (killer[i] != kNone) {
      const double birth = c.value(cell);
      const double death = c.value(order[killer[i]]);
      if (birth == death) {
        ++bc.zero_length[k];
      } else {
        bc.intervals[k].push_back({birth, death});
      }
    } else if (!is_death[i]) {
      bc.intervals[k].push_back({c.value(cell), kInfinity});
    }
  }
  for (auto& bars : bc.intervals) {
    std::sort(bars.begin(), bars.end(), [](const Interval& a, const Interval& b) {
      return a.birth != b.birth ? a.birth < b.birth : a.death < b.death;
    });
  }
  return bc;
}

}  // namespace hperc
