#include "hperc/core/complex.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

namespace hperc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonMonotoneFiltration: return "NonMonotoneFiltration";
    case ErrorCode::DanglingBoundary: return "DanglingBoundary";
    case ErrorCode::BoundaryDimension: return "BoundaryDimension";
    case ErrorCode::MalformedId: return "MalformedId";
    case ErrorCode::EssentialCountMismatch: return "EssentialCountMismatch";
    case ErrorCode::SizeTooSmall: return "SizeTooSmall";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::CliqueCountMismatch: return "CliqueCountMismatch";
    case ErrorCode::RadiusTooLarge: return "RadiusTooLarge";
    case ErrorCode::SpectrumNotPSD: return "SpectrumNotPSD";
    case ErrorCode::NoBracketsFound: return "NoBracketsFound";
    case ErrorCode::ZeroCountMismatch: return "ZeroCountMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NoValidTrials: return "NoValidTrials";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Config: return "Config";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(fmt::format("{}: {}", to_string(code), what)), code_(code) {}

std::string_view to_string(ModelKind m) {
  switch (m) {
    case ModelKind::Cubical: return "cubical";
    case ModelKind::Permutahedral: return "perm";
    case ModelKind::Boolean: return "boolean";
    case ModelKind::Grf: return "grf";
    case ModelKind::Custom: return "custom";
  }
  return "custom";
}

std::optional<ModelKind> parse_model_kind(std::string_view s) {
  if (s == "cubical") return ModelKind::Cubical;
  if (s == "perm" || s == "permutahedral") return ModelKind::Permutahedral;
  if (s == "boolean") return ModelKind::Boolean;
  if (s == "grf") return ModelKind::Grf;
  return std::nullopt;
}

FilteredComplex::FilteredComplex(int ambient_dim, ParamKind kind, ModelMeta meta)
    : ambient_dim_(ambient_dim), param_kind_(kind), meta_(meta) {}

CellId FilteredComplex::add_cell(int dim, double value, std::span<const CellId> boundary) {
  const auto id = static_cast<CellId>(dims_.size());
  dims_.push_back(dim);
  values_.push_back(value);
  faces_.insert(faces_.end(), boundary.begin(), boundary.end());
  offsets_.push_back(faces_.size());
  return id;
}

CellView FilteredComplex::cell(CellId id) const {
  return {id, dims_[id], values_[id], boundary(id)};
}

std::span<const CellId> FilteredComplex::boundary(CellId id) const {
  return std::span<const CellId>(faces_).subspan(offsets_[id], offsets_[id + 1] - offsets_[id]);
}

int FilteredComplex::top_dim() const {
  if (dims_.empty()) return -1;
  return *std::max_element(dims_.begin(), dims_.end());
}

std::vector<std::size_t> FilteredComplex::counts_by_dim() const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(std::max(top_dim() + 1, 0)), 0);
  for (int d : dims_) ++counts[static_cast<std::size_t>(d)];
  return counts;
}

std::vector<CellId> FilteredComplex::filtration_order() const {
  std::vector<CellId> order(size());
  std::iota(order.begin(), order.end(), CellId{0});
  std::sort(order.begin(), order.end(), [&](CellId a, CellId b) {
    if (values_[a] != values_[b]) return values_[a] < values_[b];
    if (dims_[a] != dims_[b]) return dims_[a] < dims_[b];
    return a < b;
  });
  return order;
}

void FilteredComplex::reserve(std::size_t cells, std::size_t incidences) {
  dims_.reserve(cells);
  values_.reserve(cells);
  offsets_.reserve(cells + 1);
  faces_.reserve(incidences);
}

ValidationReport validate_complex(const FilteredComplex& c) {
  const auto fail = [](ErrorCode code, CellId id, std::string msg) {
    ValidationReport r;
    r.ok = false;
    r.error = code;
    r.cell = id;
    r.message = std::move(msg);
    return r;
  };
  for (CellId id = 0; id < c.size(); ++id) {
    const int dim = c.dim(id);
    if (dim < 0) return fail(ErrorCode::BoundaryDimension, id, fmt::format("cell {} has negative dimension", id));
    const auto bd = c.boundary(id);
    if (dim == 0 && !bd.empty()) {
      return fail(ErrorCode::BoundaryDimension, id, fmt::format("vertex {} has a boundary", id));
    }
    for (CellId f : bd) {
      if (f >= c.size() || f == id) {
        return fail(ErrorCode::DanglingBoundary, id,
                    fmt::format("cell {} references missing face {}", id, f));
      }
      if (c.dim(f) != dim - 1) {
        return fail(ErrorCode::BoundaryDimension, id,
                    fmt::format("cell {} (dim {}) has face {} of dim {}", id, dim, f, c.dim(f)));
      }
      if (!(c.value(f) <= c.value(id))) {
        return fail(ErrorCode::NonMonotoneFiltration, id,
                    fmt::format("cell {} value {} precedes face {} value {}", id, c.value(id), f,
                                c.value(f)));
      }
    }
  }
  return {};
}

void require_valid(const FilteredComplex& c) {
  auto report = validate_complex(c);
  if (!report) throw Error(*report.error, report.message);
}

void write_dump(std::ostream& os, const FilteredComplex& c) {
  std::string line;
  for (CellId id = 0; id < c.size(); ++id) {
    line = fmt::format("{} {} {:.17g}", id, c.dim(id), c.value(id));
    const auto bd = c.boundary(id);
    for (std::size_t i = 0; i < bd.size(); ++i) {
      line += (i == 0 ? ' ' : ',');
      line += fmt::format("{}", bd[i]);
    }
    line += '\n';
    os << line;
  }
}

FilteredComplex read_dump(std::istream& is, int ambient_dim, ParamKind kind) {
  FilteredComplex c(ambient_dim, kind);
  std::string line;
  std::vector<CellId> bd;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    long long id = 0;
    int dim = 0;
    double value = 0.0;
    if (!(ls >> id >> dim >> value)) {
      throw Error(ErrorCode::Io, fmt::format("malformed dump line {}", lineno));
    }
    if (id != static_cast<long long>(c.size())) {
      throw Error(ErrorCode::MalformedId, fmt::format("line {}: expected id {}, got {}", lineno, c.size(), id));
    }
    bd.clear();
    std::string faces;
    if (ls >> faces) {
      std::istringstream fs(faces);
      std::string tok;
      while (std::getline(fs, tok, ',')) bd.push_back(static_cast<CellId>(std::stoul(tok)));
    }
    c.add_cell(dim, value, bd);
  }
  return c;
}

}  // namespace hperc
