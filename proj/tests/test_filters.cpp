#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "lacm/filters.hpp"

using namespace lacm;

namespace {

ScalarField random_field(std::mt19937_64& rng, int w, int h, double lo = 0.0, double hi = 10.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    ScalarField f(w, h);
    for (double& v : f.values) v = dist(rng);
    return f;
}

// Independent replicate-padded convolution: quadruple loop over pixels x taps.
ScalarField naive_convolve(const ScalarField& f, const Kernel2D& k) {
    const int h = f.height, w = f.width, r = k.radius;
    auto clampi = [](int v, int lo, int hi) { return v < lo ? lo : (v > hi ? hi : v); };
    ScalarField out(w, h);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < w; ++j) {
            double s = 0.0;
            for (int a = -r; a <= r; ++a)
                for (int b = -r; b <= r; ++b)
                    s += k.at(a, b) * f.at(clampi(i + a, 0, h - 1), clampi(j + b, 0, w - 1));
            out.at(i, j) = s;
        }
    return out;
}

double sum_weights(const Kernel2D& k) {
    double s = 0.0;
    for (double w : k.weights) s += w;
    return s;
}

}  // namespace

TEST_CASE("gaussian_kernel normalization and shape") {
    for (auto [sigma, radius] : {std::pair{1.0, 2}, {2.5, 5}, {15.0, 22}}) {
        Kernel2D k = gaussian_kernel(sigma, radius);
        CHECK(k.size() == 2 * radius + 1);
        CHECK(std::abs(sum_weights(k) - 1.0) <= 1e-12);
        for (double w : k.weights) CHECK(w >= 0.0);
        // center tap is the unique maximum
        double c = k.at(0, 0);
        for (int a = -radius; a <= radius; ++a)
            for (int b = -radius; b <= radius; ++b)
                if (a || b) CHECK(k.at(a, b) < c);
    }
    CHECK_THROWS_AS(gaussian_kernel(0.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_kernel(-1.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_kernel(2.0, 0), std::invalid_argument);
}

TEST_CASE("gaussian_kernel taps match the pointwise formula") {
    const double sigma = 15.0;
    const int r = 22;
    Kernel2D k = gaussian_kernel(sigma, r);
    double z = 0.0;
    for (int a = -r; a <= r; ++a)
        for (int b = -r; b <= r; ++b)
            z += std::exp(-(a * a + b * b) / (2.0 * sigma * sigma));
    for (int a = -r; a <= r; ++a)
        for (int b = -r; b <= r; ++b) {
            double want = std::exp(-(a * a + b * b) / (2.0 * sigma * sigma)) / z;
            CHECK(std::abs(k.at(a, b) - want) <= 1e-12 * want);
        }
}

TEST_CASE("isef_kernel shape, symmetry and profile ratio") {
    Kernel2D k = isef_kernel(1.2, 15);
    CHECK(k.size() == 15);
    CHECK(std::abs(sum_weights(k) - 1.0) <= 1e-12);
    for (int a = -7; a <= 7; ++a)
        for (int b = -7; b <= 7; ++b) CHECK(k.at(a, b) == k.at(-a, -b));
    // e^{-|x|/sigma} profile: adjacent-tap ratio is e^{-1/sigma}, independent
    // of normalization
    double want = std::exp(-1.0 / 1.2);
    CHECK(k.profile[8] / k.profile[7] == doctest::Approx(want).epsilon(1e-12));
    CHECK(k.at(0, 1) / k.at(0, 0) == doctest::Approx(want).epsilon(1e-12));

    CHECK_THROWS_AS(isef_kernel(1.2, 14), std::invalid_argument);
    CHECK_THROWS_AS(isef_kernel(1.2, 0), std::invalid_argument);
    CHECK_THROWS_AS(isef_kernel(0.0, 15), std::invalid_argument);
}

TEST_CASE("convolve keeps constants and the identity kernel is a no-op") {
    Kernel2D k = gaussian_kernel(2.0, 3);
    ScalarField c(9, 7, 4.5);
    ScalarField out = convolve(c, k);
    for (double v : out.values) CHECK(v == doctest::Approx(4.5).epsilon(1e-12));

    Kernel2D ident;
    ident.radius = 0;
    ident.weights = {1.0};
    std::mt19937_64 rng(11);
    ScalarField f = random_field(rng, 6, 5);
    ScalarField id1 = convolve(f, ident);  // naive path
    ident.profile = {1.0};
    ScalarField id2 = convolve(f, ident);  // separable path
    for (size_t p = 0; p < f.values.size(); ++p) {
        CHECK(id1.values[p] == f.values[p]);
        CHECK(id2.values[p] == f.values[p]);
    }
}

TEST_CASE("convolve matches the quadruple-loop oracle") {
    std::mt19937_64 rng(22);
    // separable kernels (fast path)
    for (int trial = 0; trial < 8; ++trial) {
        ScalarField f = random_field(rng, 8, 8);
        Kernel2D k = trial % 2 ? gaussian_kernel(2.0, 3) : isef_kernel(1.2, 7);
        ScalarField got = convolve(f, k);
        ScalarField want = naive_convolve(f, k);
        for (size_t p = 0; p < f.values.size(); ++p)
            CHECK(got.values[p] == doctest::Approx(want.values[p]).epsilon(1e-12));
    }
    // non-separable random kernel (direct path, exercises the same padding)
    std::uniform_real_distribution<double> wd(0.1, 1.0);
    Kernel2D k;
    k.radius = 2;
    k.weights.resize(25);
    double s = 0.0;
    for (double& w : k.weights) s += (w = wd(rng));
    for (double& w : k.weights) w /= s;
    ScalarField f = random_field(rng, 10, 6);
    ScalarField got = convolve(f, k);
    ScalarField want = naive_convolve(f, k);
    for (size_t p = 0; p < f.values.size(); ++p)
        CHECK(got.values[p] == doctest::Approx(want.values[p]).epsilon(1e-12));
}

TEST_CASE("convolve output stays within the input range") {
    std::mt19937_64 rng(33);
    ScalarField f = random_field(rng, 12, 9, -3.0, 7.0);
    for (const Kernel2D& k : {gaussian_kernel(1.5, 4), isef_kernel(1.2, 15)}) {
        ScalarField out = convolve(f, k);
        CHECK(out.min() >= f.min() - 1e-12);
        CHECK(out.max() <= f.max() + 1e-12);
    }
}

TEST_CASE("heaviside_eps values and exact complement identity") {
    CHECK(heaviside_eps(0.0, 1.0) == 0.5);
    CHECK(heaviside_eps(1.0, 1.0) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(heaviside_eps(-1.0, 1.0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK_THROWS_AS(heaviside_eps(1.0, 0.0), std::invalid_argument);

    std::mt19937_64 rng(44);
    std::uniform_real_distribution<double> dist(-50.0, 50.0);
    for (int i = 0; i < 200; ++i) {
        double phi = dist(rng), eps = std::abs(dist(rng)) + 0.01;
        double h = heaviside_eps(phi, eps);
        CHECK(h > 0.0);
        CHECK(h < 1.0);
        CHECK(heaviside_eps(phi, eps) + heaviside_eps(-phi, eps) == 1.0);
        if (phi != 0.0)
            CHECK(heaviside_eps(phi, eps) != heaviside_eps(phi * 0.5, eps));  // strictly monotone
    }
}

TEST_CASE("delta_eps formula, symmetry, and derivative of heaviside_eps") {
    CHECK(delta_eps(0.0, 1.0) == doctest::Approx(1.0 / M_PI).epsilon(1e-15));
    CHECK_THROWS_AS(delta_eps(1.0, -1.0), std::invalid_argument);

    std::mt19937_64 rng(55);
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    for (int i = 0; i < 20; ++i) {
        double x = dist(rng);
        double eps = 0.5 + std::abs(dist(rng)) / 5.0;
        CHECK(delta_eps(x, eps) == delta_eps(-x, eps));
        CHECK(delta_eps(x, eps) > 0.0);
        CHECK(delta_eps(x, eps) <= delta_eps(0.0, eps));
        // central finite difference of H_eps
        double hstep = 1e-4;
        double num = (heaviside_eps(x + hstep, eps) - heaviside_eps(x - hstep, eps)) / (2 * hstep);
        CHECK(std::abs(num - delta_eps(x, eps)) <= 1e-6);
    }
}

TEST_CASE("edge_detector is one on constants and in (0,1] in general") {
    Kernel2D isef = isef_kernel(1.2, 7);
    ScalarField c(10, 10, 123.0);
    ScalarField g = edge_detector(c, 20.0, isef);
    for (double v : g.values) CHECK(v == 1.0);

    std::mt19937_64 rng(66);
    ScalarField f = random_field(rng, 10, 10, 1.0, 255.0);
    g = edge_detector(f, 20.0, isef);
    for (double v : g.values) {
        CHECK(v > 0.0);
        CHECK(v <= 1.0);
    }
    CHECK_THROWS_AS(edge_detector(f, 0.0, isef), std::invalid_argument);
}

TEST_CASE("edge_detector matches the composed oracle") {
    Kernel2D isef = isef_kernel(1.2, 7);
    std::mt19937_64 rng(77);
    ScalarField f = random_field(rng, 9, 9, 0.0, 1.0);
    // sharpen one edge so the gradient term actually matters
    for (int i = 0; i < 9; ++i)
        for (int j = 5; j < 9; ++j) f.at(i, j) += 3.0;

    ScalarField smoothed = naive_convolve(f, isef);
    GradPair gr = grad_forward(smoothed);
    ScalarField g = edge_detector(f, 20.0, isef);
    for (size_t p = 0; p < f.values.size(); ++p) {
        double s = gr.gx.values[p] * gr.gx.values[p] + gr.gy.values[p] * gr.gy.values[p];
        CHECK(g.values[p] == doctest::Approx(1.0 / (1.0 + 20.0 * s)).epsilon(1e-12));
    }
}

TEST_CASE("edge_detector ignores constant offsets") {
    Kernel2D isef = isef_kernel(1.2, 15);
    std::mt19937_64 rng(88);
    ScalarField f = random_field(rng, 16, 16, 0.0, 1.0);
    ScalarField f2 = f;
    for (double& v : f2.values) v += 100.0;
    ScalarField g1 = edge_detector(f, 20.0, isef);
    ScalarField g2 = edge_detector(f2, 20.0, isef);
    for (size_t p = 0; p < g1.values.size(); ++p)
        CHECK(std::abs(g1.values[p] - g2.values[p]) <= 1e-9);
}

TEST_CASE("edge_detector_normalized divides by the max first") {
    Kernel2D isef = isef_kernel(1.2, 7);
    std::mt19937_64 rng(99);
    ScalarField f = random_field(rng, 8, 8, 1.0, 255.0);
    ScalarField fn = f;
    double m = f.max();
    for (double& v : fn.values) v /= m;
    ScalarField a = edge_detector_normalized(f, 20.0, isef);
    ScalarField b = edge_detector(fn, 20.0, isef);
    for (size_t p = 0; p < a.values.size(); ++p) CHECK(a.values[p] == b.values[p]);

    ScalarField neg(4, 4, -1.0);
    CHECK_THROWS_AS(edge_detector_normalized(neg, 20.0, isef), std::invalid_argument);
}
