#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "hperc/core/complex.hpp"

namespace hperc {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Interval {
  double birth;
  double death;

  bool essential() const { return death == kInfinity; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct Barcode {
  int ambient_dim = 0;
  int max_degree = -1;
  // Indexed by degree, each sorted by (birth, death). Zero-length intervals
  // are not listed.
  std::vector<std::vector<Interval>> intervals;
  // Number of dropped zero-length intervals per degree.
  std::vector<std::size_t> zero_length;

  std::span<const Interval> degree(int k) const;
  std::size_t essential_count(int k) const;

  friend bool operator==(const Barcode&, const Barcode&) = default;
};

struct PersistenceOptions {
  // Skip columns known to reduce to zero (pivot rows of the next dimension).
  bool clearing = true;
};

// Standard column reduction over GF(2) on cells ordered by (value, dim, id).
// Cells of dimension max_degree + 1 participate only as killers; higher
// cells are ignored.
Barcode compute_persistence(const FilteredComplex& c, int max_degree,
                            PersistenceOptions options = {});

}  // namespace hperc
