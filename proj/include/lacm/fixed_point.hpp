#pragma once

#include "lacm/config.hpp"
#include "lacm/localstats.hpp"

namespace lacm {

// (I - shrink)(x, threshold) = x - shrink(x, threshold) = sgn(x) min(|x|, threshold).
double imshrink(double x, double threshold);

// Relaxed b-update: b = t b_prev + (1-t) (I - shrink_thr)(grad_forward(phi) + b_prev)
// per axis. thr = g[p]/lambda per pixel when g is given, else the literal
// constant 1/lambda.
GradPair fp_b_update(const ScalarField& phi, const GradPair& b_prev, double t, double lambda,
                     const ScalarField* g = nullptr);

// phi_next = clamp(phi - (mu/alpha) eta - (lambda/alpha) div_adjoint(b), 0, 1).
ScalarField fp1_phi_update(const ScalarField& phi, const ScalarField& eta, const GradPair& b,
                           double mu, double alpha, double lambda);

// varphi = clamp(phi - c_prev - (mu/alpha) eta, 0, 1); c = c_prev + varphi - phi.
struct VarphiUpdate {
    ScalarField varphi;
    ScalarField c;
};
VarphiUpdate fp2_varphi_update(const ScalarField& phi, const ScalarField& c_prev,
                               const ScalarField& eta, double mu, double alpha);

// phi_next = clamp(phi + c - (lambda/alpha) div_adjoint(b), 0, 1).
ScalarField fp2_phi_update(const ScalarField& phi, const ScalarField& c, const GradPair& b,
                           double alpha, double lambda);

// Both solvers: phi0 = f/max(f), b0 = 0 (fp2 also c0 = 0). Each outer
// iteration refreshes stats/eta, then iterates the inner (b, phi) updates
// until ||dphi||_2 < inner_tol (cap inner_max); outer stop ||dphi||_2 < vol.
// Mask = {phi > gamma}. Requires lambda/alpha < 1/4.
SegmentationResult run_fp1(const ScalarField& f, const SolverConfig& cfg);
SegmentationResult run_fp2(const ScalarField& f, const SolverConfig& cfg);

}  // namespace lacm
