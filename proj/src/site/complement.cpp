#include "hperc/site/complement.hpp"

#include <algorithm>
#include <limits>

namespace hperc {

FilteredComplex complement_filtration(const FilteredComplex& c) {
  FilteredComplex out = c;
  const int top = c.top_dim();
  switch (c.meta().site_rule) {
    case SiteRule::VerticesMax: {
      // Dimension-ascending pass so every face is final before its cofaces.
      for (int dim = 0; dim <= top; ++dim) {
        for (CellId id = 0; id < c.size(); ++id) {
          if (c.dim(id) != dim) continue;
          if (dim == 0) {
            out.set_value(id, 1.0 - c.value(id));
            continue;
          }
          double v = -std::numeric_limits<double>::infinity();
          for (CellId f : c.boundary(id)) v = std::max(v, out.value(f));
          out.set_value(id, v);
        }
      }
      break;
    }
    case SiteRule::TopCellsMin: {
      std::vector<double> v(c.size(), std::numeric_limits<double>::infinity());
      for (int dim = top; dim >= 0; --dim) {
        for (CellId id = 0; id < c.size(); ++id) {
          if (c.dim(id) != dim) continue;
          if (dim == top) v[id] = 1.0 - c.value(id);
          for (CellId f : c.boundary(id)) v[f] = std::min(v[f], v[id]);
        }
      }
      for (CellId id = 0; id < c.size(); ++id) out.set_value(id, v[id]);
      break;
    }
    case SiteRule::None:
      throw Error(ErrorCode::InvalidArgument, "complement needs a site-model complex");
  }
  return out;
}

}  // namespace hperc
