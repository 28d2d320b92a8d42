#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hperc/core/error.hpp"

namespace hperc {

using CellId = std::uint32_t;

// Units of the filtration parameter.
enum class ParamKind { SiteProbability, Radius, Level };

enum class ModelKind { Cubical, Permutahedral, Boolean, Grf, Custom };

// How face values derive from site values in a site model. Used to rebuild
// the filtration after a change of site values (see complement_filtration).
enum class SiteRule {
  None,
  TopCellsMin,  // sites are the top cells; a face enters with its first incident site
  VerticesMax,  // sites are the vertices; lower-star
};

struct ModelMeta {
  ModelKind model = ModelKind::Custom;
  int size = 0;  // m, intensity n, or grid g
  std::uint64_t seed = 0;
  SiteRule site_rule = SiteRule::None;
};

struct CellView {
  CellId id;
  int dim;
  double value;
  std::span<const CellId> boundary;
};

// Cells stored column-wise with a flat boundary array. Cell ids are dense and
// equal to insertion order.
class FilteredComplex {
 public:
  FilteredComplex() = default;
  FilteredComplex(int ambient_dim, ParamKind kind, ModelMeta meta = {});

  CellId add_cell(int dim, double value, std::span<const CellId> boundary);
  CellId add_cell(int dim, double value, std::initializer_list<CellId> boundary) {
    return add_cell(dim, value, std::span<const CellId>(boundary.begin(), boundary.size()));
  }

  std::size_t size() const { return dims_.size(); }
  bool empty() const { return dims_.empty(); }
  CellView cell(CellId id) const;
  int dim(CellId id) const { return dims_[id]; }
  double value(CellId id) const { return values_[id]; }
  std::span<const CellId> boundary(CellId id) const;
  void set_value(CellId id, double v) { values_[id] = v; }

  int ambient_dim() const { return ambient_dim_; }
  int top_dim() const;
  ParamKind param_kind() const { return param_kind_; }
  const ModelMeta& meta() const { return meta_; }
  ModelMeta& meta() { return meta_; }

  // Number of cells of each dimension 0..top_dim().
  std::vector<std::size_t> counts_by_dim() const;

  // Cells sorted by (value, dim, id).
  std::vector<CellId> filtration_order() const;

  void reserve(std::size_t cells, std::size_t incidences);

 private:
  int ambient_dim_ = 0;
  ParamKind param_kind_ = ParamKind::SiteProbability;
  ModelMeta meta_;
  std::vector<int> dims_;
  std::vector<double> values_;
  std::vector<std::size_t> offsets_{0};
  std::vector<CellId> faces_;
};

struct ValidationReport {
  bool ok = true;
  std::optional<ErrorCode> error;
  CellId cell = 0;
  std::string message;

  explicit operator bool() const { return ok; }
};

ValidationReport validate_complex(const FilteredComplex& c);

// Throws the report's error if the complex is invalid.
void require_valid(const FilteredComplex& c);

// Debug dump: one cell per line, "id dim value b1,b2,...". Values are printed
// with 17 significant digits so a dump reads back bit-exactly.
void write_dump(std::ostream& os, const FilteredComplex& c);
FilteredComplex read_dump(std::istream& is, int ambient_dim, ParamKind kind);

std::string_view to_string(ModelKind m);
std::optional<ModelKind> parse_model_kind(std::string_view s);

}  // namespace hperc
