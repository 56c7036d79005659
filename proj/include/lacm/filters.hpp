#pragma once

#include "lacm/field.hpp"

namespace lacm {

// Square (2r+1)x(2r+1) kernel, weights normalized to sum 1. Kernels built by
// gaussian_kernel/isef_kernel are outer products of a normalized 1-D profile;
// the profile is kept so convolve can take the separable fast path (which must
// agree with the naive sum to 1e-12 -- covered by tests).
struct Kernel2D {
    int radius = 0;
    std::vector<double> weights;   // row-major, (2r+1)^2
    std::vector<double> profile;   // 1-D normalized profile when separable, else empty

    int size() const { return 2 * radius + 1; }
    double at(int di, int dj) const {
        return weights[static_cast<size_t>(di + radius) * size() + (dj + radius)];
    }
    bool separable() const { return !profile.empty(); }
};

// weights[di,dj] proportional to exp(-(di^2+dj^2)/(2 sigma^2)), sum 1.
// Default truncation radius when unspecified elsewhere: ceil(1.5*sigma).
Kernel2D gaussian_kernel(double sigma, int radius);

// Separable product of the ISEF profile (1/2sigma) e^{-|x|/sigma}, odd size,
// normalized to sum 1.
Kernel2D isef_kernel(double sigma, int size);

// Replicate-padded convolution; separable two-pass when the kernel carries a
// profile, naive direct sum otherwise. Output dims equal input dims.
ScalarField convolve(const ScalarField& f, const Kernel2D& k);

// Smoothed Heaviside H_eps(phi) = 1/2 [1 + (2/pi) arctan(phi/eps)].
// Computed from |phi| with the sign applied afterwards so that
// H(phi) + H(-phi) == 1 exactly.
double heaviside_eps(double phi, double eps);

// delta_eps(phi) = (1/pi) eps/(eps^2 + phi^2), the derivative of H_eps.
double delta_eps(double phi, double eps);

// g = 1/(1 + beta |grad(f (x) isef)|^2) with grad = grad_forward; in (0,1].
ScalarField edge_detector(const ScalarField& f, double beta, const Kernel2D& isef);

// Edge map the solvers actually use: edge_detector(f / max(f), ...).
// beta = 20 is calibrated for unit-range images; raw 8-bit input would push
// |grad|^2 to ~1e3 and flatten g to ~0 everywhere.
ScalarField edge_detector_normalized(const ScalarField& f, double beta, const Kernel2D& isef);

}  // namespace lacm
