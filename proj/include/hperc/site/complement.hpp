#pragma once

#include "hperc/core/complex.hpp"

namespace hperc {

// Same cells with every site value u replaced by 1 - u and face values
// rebuilt by the complex's site rule. For site values on the 2^-53 grid the
// map is an exact involution.
FilteredComplex complement_filtration(const FilteredComplex& c);

}  // namespace hperc
