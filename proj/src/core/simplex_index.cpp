#include "hperc/core/simplex_index.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace hperc {

std::size_t SimplexIndex::Hash::operator()(const std::vector<std::uint32_t>& v) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
  for (std::uint32_t x : v) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 31));
}

CellId SimplexIndex::add(std::span<const std::uint32_t> vertices, double value) {
  const int dim = static_cast<int>(vertices.size()) - 1;
  if (dim < 0) throw Error(ErrorCode::InvalidArgument, "empty simplex");
  scratch_.clear();
  if (dim > 0) {
    key_.assign(vertices.begin(), vertices.end() - 1);
    for (std::size_t skip = vertices.size(); skip-- > 0;) {
      // key_ = vertices without vertices[skip]
      if (skip + 1 < vertices.size()) key_[skip] = vertices[skip + 1];
      auto it = ids_.find(key_);
      if (it == ids_.end()) {
        throw Error(ErrorCode::DanglingBoundary,
                    fmt::format("facet of a {}-simplex added before its faces", dim));
      }
      scratch_.push_back(it->second);
    }
  }
  const CellId id = target_.add_cell(dim, value, scratch_);
  ids_.emplace(std::vector<std::uint32_t>(vertices.begin(), vertices.end()), id);
  return id;
}

CellId SimplexIndex::add_monotone(std::span<const std::uint32_t> vertices, double value) {
  const CellId id = add(vertices, value);
  double v = value;
  for (CellId f : target_.boundary(id)) v = std::max(v, target_.value(f));
  if (v != value) target_.set_value(id, v);
  return id;
}

std::optional<CellId> SimplexIndex::find(std::span<const std::uint32_t> vertices) const {
  auto it = ids_.find(std::vector<std::uint32_t>(vertices.begin(), vertices.end()));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

}  // namespace hperc
