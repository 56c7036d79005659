#pragma once

#include "lacm/field.hpp"

namespace lacm {

// Dice similarity 2|CS n GT| / (|CS| + |GT|). Throws if shapes differ or both
// masks are empty (undefined).
double dsc(const BinaryMask& cs, const BinaryMask& gt);

// Region-uniformity score 1 - W/C where W is the within-region sum of squared
// deviations (foreground + background, each against its own mean) and C is
// the total sum of squared deviations from the global mean. An empty region
// contributes zero to W, so the whole-image mask scores exactly 0. With
// normalized=false the raw 1 - W is returned (no normalization constant).
double pp_uniformity(const ScalarField& f, const BinaryMask& mask, bool normalized = true);

}  // namespace lacm
