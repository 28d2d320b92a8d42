#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "hperc/core/complex.hpp"

namespace hperc {

// Builds a simplicial FilteredComplex from sorted vertex tuples. Simplices
// must be added after all of their facets.
class SimplexIndex {
 public:
  explicit SimplexIndex(FilteredComplex& target) : target_(target) {}

  // `vertices` must be strictly increasing vertex labels.
  CellId add(std::span<const std::uint32_t> vertices, double value);
  // As add(), but raises the value to the largest facet value first. Absorbs
  // rounding in geometrically computed filtration values.
  CellId add_monotone(std::span<const std::uint32_t> vertices, double value);
  std::optional<CellId> find(std::span<const std::uint32_t> vertices) const;

 private:
  struct Hash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept;
  };

  FilteredComplex& target_;
  std::unordered_map<std::vector<std::uint32_t>, CellId, Hash> ids_;
  std::vector<CellId> scratch_;
  std::vector<std::uint32_t> key_;
};

}  // namespace hperc
