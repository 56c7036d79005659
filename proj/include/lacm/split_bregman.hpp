#pragma once

#include "lacm/config.hpp"
#include "lacm/localstats.hpp"

namespace lacm {

// Soft threshold sgn(x) max(|x| - threshold, 0).
double shrink(double x, double threshold);

// One in-place row-major Gauss-Seidel sweep of
//   beta_ij = 1/4 (phi_N + phi_S + phi_W + phi_E + alpha_ij - mu eta_ij / lambda)
//   phi_ij  = clamp(beta_ij, 0, 1)
// with replicate phi neighbors and alpha = div_adjoint(d - b) (exact-adjoint
// boundary convention). Already-updated neighbors are used as the sweep goes.
ScalarField sb_phi_update(const ScalarField& phi, const GradPair& d, const GradPair& b,
                          const ScalarField& eta, double mu, double lambda);

// d = shrink(grad_forward(phi) + b, g/lambda) per axis, per pixel.
GradPair sb_d_update(const ScalarField& phi, const GradPair& b, const ScalarField& g,
                     double lambda);

// b += grad_forward(phi) - d, per axis.
void sb_bregman_update(GradPair& b, const ScalarField& phi, const GradPair& d);

// Full solver: phi0 = f/max(f), d0 = b0 = 0; per outer iteration refresh
// stats/eta, sweep phi, shrink d, update b; stop when ||dphi||_2 < vol.
// Mask = {phi > gamma}.
SegmentationResult run_sb_lacm(const ScalarField& f, const SolverConfig& cfg);

}  // namespace lacm
