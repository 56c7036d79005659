#pragma once

#include "lacm/field.hpp"
#include "lacm/filters.hpp"

namespace lacm {

// Spatially varying fitted region means; strictly positive (floored at 1e-8)
// so log C_i stays finite.
struct RegionStats {
    ScalarField c1;  // foreground mean
    ScalarField c2;  // background mean
};

// c1 = conv(h*f,k)/conv(h,k), c2 = conv((1-h)*f,k)/conv(1-h,k) with the
// denominators floored at 1e-8 before dividing and the results floored at
// 1e-8. h is the membership field in [0,1].
RegionStats update_region_means(const ScalarField& f, const ScalarField& h, const Kernel2D& k);

// eta[x] = conv(log c1)[x] + f[x] conv(1/c1)[x] - conv(log c2)[x] - f[x] conv(1/c2)[x].
// With literal=true the last term uses conv(1/c1) instead (the source text's
// exact formula, in which the two f-terms cancel); kept for comparison.
ScalarField eta_field(const ScalarField& f, const RegionStats& stats, const Kernel2D& k,
                      bool literal = false);

}  // namespace lacm
