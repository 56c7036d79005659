#pragma once

// Internals shared by the convex solvers (sb, fp1, fp2); not installed.

#include "lacm/config.hpp"
#include "lacm/localstats.hpp"

namespace lacm::detail {

struct ConvexSetup {
    Kernel2D kern;    // region-fitting Gaussian
    ScalarField g;    // normalized edge map
    ScalarField phi0; // f / max(f)
};

inline ConvexSetup convex_setup(const ScalarField& f, const SolverConfig& cfg) {
    ConvexSetup s{gaussian_kernel(cfg.sigma, cfg.radius),
                  edge_detector_normalized(f, cfg.beta, isef_kernel(cfg.isef_sigma, cfg.isef_size)),
                  f};
    double m = f.max();
    if (m <= 0.0) throw std::invalid_argument("solver input must have positive values");
    for (double& v : s.phi0.values) v /= m;
    return s;
}

// Membership field feeding the region statistics. Default: the thresholded
// mask 1{phi > gamma}; the relaxed phi itself behind the config switch.
inline ScalarField membership_field(const ScalarField& phi, const SolverConfig& cfg) {
    if (cfg.membership == StatsMembership::phi) return phi;
    ScalarField h(phi.width, phi.height);
    for (size_t p = 0; p < phi.values.size(); ++p)
        h.values[p] = phi.values[p] > cfg.gamma ? 1.0 : 0.0;
    return h;
}

inline BinaryMask threshold_mask(const ScalarField& phi, double gamma) {
    BinaryMask m(phi.width, phi.height);
    for (size_t p = 0; p < phi.values.size(); ++p)
        m.values[p] = phi.values[p] > gamma ? 1 : 0;
    return m;
}

}  // namespace lacm::detail
