#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "lacm/metrics.hpp"

using namespace lacm;

namespace {

BinaryMask random_mask(std::mt19937_64& rng, int w, int h, double p = 0.5) {
    std::bernoulli_distribution dist(p);
    BinaryMask m(w, h);
    for (auto& v : m.values) v = dist(rng) ? 1 : 0;
    return m;
}

ScalarField random_field(std::mt19937_64& rng, int w, int h, double lo = 0.0, double hi = 255.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    ScalarField f(w, h);
    for (double& v : f.values) v = dist(rng);
    return f;
}

// Independent PP oracle: explicit two-pass region statistics.
double pp_oracle(const ScalarField& f, const BinaryMask& mask, bool normalized) {
    double s1 = 0, s2 = 0, sg = 0;
    long n1 = 0, n2 = 0;
    const long n = static_cast<long>(f.values.size());
    for (long p = 0; p < n; ++p) {
        sg += f.values[p];
        if (mask.values[p]) {
            s1 += f.values[p];
            ++n1;
        } else {
            s2 += f.values[p];
            ++n2;
        }
    }
    double m1 = n1 ? s1 / n1 : 0, m2 = n2 ? s2 / n2 : 0, mg = sg / n;
    double w = 0, c = 0;
    for (long p = 0; p < n; ++p) {
        double v = f.values[p];
        double d = mask.values[p] ? v - m1 : v - m2;
        w += d * d;
        c += (v - mg) * (v - mg);
    }
    if (!normalized) return 1.0 - w;
    if (c == 0.0) return 1.0;
    return 1.0 - w / c;
}

}  // namespace

TEST_CASE("dsc basic values") {
    BinaryMask a(10, 10), b(10, 10);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) a.at(i, j) = b.at(i, j) = 1;
    CHECK(dsc(a, b) == 1.0);

    BinaryMask c(10, 10);
    for (int j = 6; j < 9; ++j) c.at(8, j) = 1;  // disjoint from a
    CHECK(dsc(a, c) == 0.0);
}

TEST_CASE("dsc exact rational example: 100/100 masks with overlap 80") {
    BinaryMask cs(20, 10), gt(20, 10);
    // cs = first 100 pixels, gt = pixels 20..119: overlap 80
    for (int p = 0; p < 100; ++p) cs.values[p] = 1;
    for (int p = 20; p < 120; ++p) gt.values[p] = 1;
    CHECK(dsc(cs, gt) == 0.8);
}

TEST_CASE("dsc symmetry and self-identity are exact") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 30; ++trial) {
        BinaryMask a = random_mask(rng, 9, 7), b = random_mask(rng, 9, 7);
        if (a.count() + b.count() == 0) continue;
        CHECK(dsc(a, b) == dsc(b, a));
        if (a.count()) CHECK(dsc(a, a) == 1.0);
    }
}

TEST_CASE("dsc error cases") {
    BinaryMask a(5, 5), b(5, 5);
    CHECK_THROWS_AS(dsc(a, b), std::invalid_argument);  // both empty
    BinaryMask c(6, 5);
    c.at(0, 0) = 1;
    CHECK_THROWS_AS(dsc(a, c), std::invalid_argument);  // dimension mismatch
}

TEST_CASE("dsc matches a set-count oracle on random masks") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        BinaryMask a = random_mask(rng, 12, 8, 0.3), b = random_mask(rng, 12, 8, 0.6);
        long na = 0, nb = 0, ni = 0;
        for (size_t p = 0; p < a.values.size(); ++p) {
            na += a.values[p] != 0;
            nb += b.values[p] != 0;
            ni += (a.values[p] && b.values[p]);
        }
        if (na + nb == 0) continue;
        CHECK(dsc(a, b) == 2.0 * ni / (na + nb));
    }
}

TEST_CASE("pp is exactly 1 for a perfectly segmented piecewise-constant image") {
    ScalarField f(10, 10);
    BinaryMask m(10, 10);
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            bool fg = (i + j) % 3 == 0;
            f.at(i, j) = fg ? 180.0 : 60.0;
            m.at(i, j) = fg;
        }
    CHECK(pp_uniformity(f, m) == 1.0);
}

TEST_CASE("pp is exactly 0 for the whole-image region") {
    std::mt19937_64 rng(3);
    ScalarField f = random_field(rng, 8, 8);
    BinaryMask whole(8, 8);
    for (auto& v : whole.values) v = 1;
    CHECK(pp_uniformity(f, whole) == 0.0);
    BinaryMask empty(8, 8);  // all pixels background: single region again
    CHECK(pp_uniformity(f, empty) == 0.0);
}

TEST_CASE("pp of a globally constant image is 1") {
    ScalarField f(6, 6, 42.0);
    std::mt19937_64 rng(4);
    BinaryMask m = random_mask(rng, 6, 6);
    CHECK(pp_uniformity(f, m) == 1.0);
}

TEST_CASE("pp matches the direct summation oracle") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        ScalarField f = random_field(rng, 8, 8);
        BinaryMask m = random_mask(rng, 8, 8);
        double want = pp_oracle(f, m, true);
        double got = pp_uniformity(f, m);
        CHECK(std::abs(got - want) <= 1e-12 * std::max(1.0, std::abs(want)));
        double wantl = pp_oracle(f, m, false);
        double gotl = pp_uniformity(f, m, false);
        CHECK(std::abs(gotl - wantl) <= 1e-12 * std::max(1.0, std::abs(wantl)));
    }
}

TEST_CASE("pp is invariant to affine intensity changes") {
    std::mt19937_64 rng(6);
    ScalarField f = random_field(rng, 9, 9);
    BinaryMask m = random_mask(rng, 9, 9);
    double base = pp_uniformity(f, m);

    ScalarField shifted = f, scaled = f;
    for (double& v : shifted.values) v += 37.5;
    for (double& v : scaled.values) v *= -2.5;
    CHECK(std::abs(pp_uniformity(shifted, m) - base) <= 1e-12);
    CHECK(std::abs(pp_uniformity(scaled, m) - base) <= 1e-12);
}

TEST_CASE("pp rejects dimension mismatch") {
    ScalarField f(5, 5, 1.0);
    BinaryMask m(6, 5);
    CHECK_THROWS_AS(pp_uniformity(f, m), std::invalid_argument);
}

TEST_CASE("unnormalized pp equals one minus the raw within-region sum") {
    ScalarField f(4, 4);
    BinaryMask m(4, 4);
    // two constant regions: W = 0, so both variants give exactly 1
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            f.at(i, j) = i < 2 ? 10.0 : 20.0;
            m.at(i, j) = i < 2;
        }
    CHECK(pp_uniformity(f, m, false) == 1.0);
    CHECK(pp_uniformity(f, m, true) == 1.0);
}
