#include "lacm/filters.hpp"

#include <algorithm>
#include <cmath>

namespace lacm {

namespace {

Kernel2D from_profile(std::vector<double> p, int radius) {
    double s = 0.0;
    for (double v : p) s += v;
    for (double& v : p) v /= s;
    Kernel2D k;
    k.radius = radius;
    const int n = 2 * radius + 1;
    k.weights.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            k.weights[static_cast<size_t>(a) * n + b] = p[a] * p[b];
    k.profile = std::move(p);
    return k;
}

inline int clampi(int v, int lo, int hi) { return v < lo ? lo : (v > hi ? hi : v); }

}  // namespace

Kernel2D gaussian_kernel(double sigma, int radius) {
    if (sigma <= 0.0) throw std::invalid_argument("gaussian_kernel: sigma must be > 0");
    if (radius < 1) throw std::invalid_argument("gaussian_kernel: radius must be >= 1");
    std::vector<double> p(2 * radius + 1);
    for (int d = -radius; d <= radius; ++d)
        p[d + radius] = std::exp(-(static_cast<double>(d) * d) / (2.0 * sigma * sigma));
    return from_profile(std::move(p), radius);
}

Kernel2D isef_kernel(double sigma, int size) {
    if (sigma <= 0.0) throw std::invalid_argument("isef_kernel: sigma must be > 0");
    if (size < 1 || size % 2 == 0) throw std::invalid_argument("isef_kernel: size must be odd");
    const int radius = size / 2;
    std::vector<double> p(size);
    for (int d = -radius; d <= radius; ++d)
        p[d + radius] = (1.0 / (2.0 * sigma)) * std::exp(-std::abs(d) / sigma);
    return from_profile(std::move(p), radius);
}

ScalarField convolve(const ScalarField& f, const Kernel2D& k) {
    const int h = f.height, w = f.width, r = k.radius;
    ScalarField out(w, h);
    if (k.separable()) {
        // horizontal pass then vertical pass; replicate clamping acts per axis,
        // so the two-pass result equals the full 2-D sum with product weights.
        ScalarField tmp(w, h);
        for (int i = 0; i < h; ++i) {
            for (int j = 0; j < w; ++j) {
                double s = 0.0;
                for (int d = -r; d <= r; ++d)
                    s += k.profile[d + r] * f.at(i, clampi(j + d, 0, w - 1));
                tmp.at(i, j) = s;
            }
        }
        for (int i = 0; i < h; ++i) {
            double* row = &out.at(i, 0);
            for (int j = 0; j < w; ++j) row[j] = 0.0;
            for (int d = -r; d <= r; ++d) {
                const double wgt = k.profile[d + r];
                const double* src = &tmp.at(clampi(i + d, 0, h - 1), 0);
                for (int j = 0; j < w; ++j) row[j] += wgt * src[j];
            }
        }
        return out;
    }
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < w; ++j) {
            double s = 0.0;
            for (int a = -r; a <= r; ++a)
                for (int b = -r; b <= r; ++b)
                    s += k.at(a, b) * f.at(clampi(i + a, 0, h - 1), clampi(j + b, 0, w - 1));
            out.at(i, j) = s;
        }
    }
    return out;
}

double heaviside_eps(double phi, double eps) {
    if (eps <= 0.0) throw std::invalid_argument("heaviside_eps: eps must be > 0");
    double a = (1.0 / M_PI) * std::atan(std::abs(phi) / eps);
    return phi < 0.0 ? 0.5 - a : 0.5 + a;
}

double delta_eps(double phi, double eps) {
    if (eps <= 0.0) throw std::invalid_argument("delta_eps: eps must be > 0");
    return (1.0 / M_PI) * (eps / (eps * eps + phi * phi));
}

ScalarField edge_detector(const ScalarField& f, double beta, const Kernel2D& isef) {
    if (beta <= 0.0) throw std::invalid_argument("edge_detector: beta must be > 0");
    GradPair g = grad_forward(convolve(f, isef));
    ScalarField out(f.width, f.height);
    for (size_t p = 0; p < out.values.size(); ++p) {
        double gx = g.gx.values[p], gy = g.gy.values[p];
        out.values[p] = 1.0 / (1.0 + beta * (gx * gx + gy * gy));
    }
    return out;
}

ScalarField edge_detector_normalized(const ScalarField& f, double beta, const Kernel2D& isef) {
    double m = f.max();
    if (m <= 0.0) throw std::invalid_argument("edge_detector_normalized: image must have positive values");
    ScalarField fn = f;
    for (double& v : fn.values) v /= m;
    return edge_detector(fn, beta, isef);
}

}  // namespace lacm
