#include "lacm/metrics.hpp"

#include <stdexcept>

namespace lacm {

double dsc(const BinaryMask& cs, const BinaryMask& gt) {
    if (cs.width != gt.width || cs.height != gt.height)
        throw std::invalid_argument("dsc: mask dimensions differ");
    size_t ncs = 0, ngt = 0, ninter = 0;
    for (size_t p = 0; p < cs.values.size(); ++p) {
        bool a = cs.values[p] != 0, b = gt.values[p] != 0;
        ncs += a;
        ngt += b;
        ninter += a && b;
    }
    if (ncs + ngt == 0) throw std::invalid_argument("dsc: both masks empty, value undefined");
    return 2.0 * static_cast<double>(ninter) / static_cast<double>(ncs + ngt);
}

double pp_uniformity(const ScalarField& f, const BinaryMask& mask, bool normalized) {
    if (f.width != mask.width || f.height != mask.height)
        throw std::invalid_argument("pp_uniformity: dimensions differ");
    const size_t n = f.values.size();

    double sum1 = 0.0, sum2 = 0.0, sumall = 0.0;
    size_t n1 = 0;
    for (size_t p = 0; p < n; ++p) {
        double v = f.values[p];
        sumall += v;
        if (mask.values[p]) {
            sum1 += v;
            ++n1;
        } else {
            sum2 += v;
        }
    }
    const size_t n2 = n - n1;
    const double m1 = n1 ? sum1 / n1 : 0.0;
    const double m2 = n2 ? sum2 / n2 : 0.0;
    const double mg = sumall / n;

    double w = 0.0, c = 0.0;
    for (size_t p = 0; p < n; ++p) {
        double v = f.values[p];
        double dm = mask.values[p] ? v - m1 : v - m2;
        w += dm * dm;
        double dg = v - mg;
        c += dg * dg;
    }
    if (!normalized) return 1.0 - w;
    if (c == 0.0) return 1.0;  // globally constant image: every region is uniform
    return 1.0 - w / c;
}

}  // namespace lacm
