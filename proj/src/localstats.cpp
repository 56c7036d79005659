#include "lacm/localstats.hpp"

#include <cmath>

namespace lacm {

namespace {
constexpr double kFloor = 1e-8;
}

RegionStats update_region_means(const ScalarField& f, const ScalarField& h, const Kernel2D& k) {
    if (!f.same_shape(h)) throw std::invalid_argument("update_region_means: shape mismatch");
    const size_t n = f.values.size();
    ScalarField hf(f.width, f.height), hc(f.width, f.height), hcf(f.width, f.height);
    for (size_t p = 0; p < n; ++p) {
        hf.values[p] = h.values[p] * f.values[p];
        hc.values[p] = 1.0 - h.values[p];
        hcf.values[p] = hc.values[p] * f.values[p];
    }
    ScalarField num1 = convolve(hf, k), den1 = convolve(h, k);
    ScalarField num2 = convolve(hcf, k), den2 = convolve(hc, k);
    RegionStats s{ScalarField(f.width, f.height), ScalarField(f.width, f.height)};
    for (size_t p = 0; p < n; ++p) {
        s.c1.values[p] = std::max(num1.values[p] / std::max(den1.values[p], kFloor), kFloor);
        s.c2.values[p] = std::max(num2.values[p] / std::max(den2.values[p], kFloor), kFloor);
    }
    return s;
}

ScalarField eta_field(const ScalarField& f, const RegionStats& stats, const Kernel2D& k,
                      bool literal) {
    const size_t n = f.values.size();
    ScalarField log1(f.width, f.height), inv1(f.width, f.height);
    ScalarField log2(f.width, f.height), inv2(f.width, f.height);
    for (size_t p = 0; p < n; ++p) {
        log1.values[p] = std::log(stats.c1.values[p]);
        inv1.values[p] = 1.0 / stats.c1.values[p];
        log2.values[p] = std::log(stats.c2.values[p]);
        inv2.values[p] = 1.0 / stats.c2.values[p];
    }
    ScalarField a = convolve(log1, k), b = convolve(inv1, k);
    ScalarField c = convolve(log2, k), d = convolve(inv2, k);
    ScalarField eta(f.width, f.height);
    for (size_t p = 0; p < n; ++p) {
        double second = literal ? b.values[p] : d.values[p];
        eta.values[p] = a.values[p] + f.values[p] * b.values[p]
                      - c.values[p] - f.values[p] * second;
    }
    return eta;
}

}  // namespace lacm
