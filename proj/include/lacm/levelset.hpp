#pragma once

#include "lacm/config.hpp"
#include "lacm/localstats.hpp"

namespace lacm {

// Inclusive pixel rectangle: rows r0..r1, columns c0..c1.
struct Rect {
    int r0 = 0, c0 = 0, r1 = 0, c1 = 0;
};

struct LevelSetState {
    ScalarField phi;    // signed level-set values
    RegionStats stats;  // region means fitted from the current phi
    int iter = 0;
};

// phi = +1 inside rect, -1 outside; stats fitted from the H_eps membership of
// this step function. The rect must be nonempty, in bounds and not the whole
// image (the background phase must exist).
LevelSetState init_binary(const ScalarField& f, const Rect& rect, const SolverConfig& cfg);

// One explicit Euler step of the gradient-descent flow
//   dphi/dt = delta_eps(phi) (theta div(g grad(phi)/|grad(phi)|) - mu eta)
//           + nu (lap(phi) - div(grad(phi)/|grad(phi)|))
// with central differences, |grad phi| regularized as sqrt(gx^2+gy^2+1e-10),
// and stats/eta refreshed from the incoming phi.
LevelSetState evolve_step(const LevelSetState& state, const ScalarField& f,
                          const ScalarField& g, const SolverConfig& cfg);

// Full run: centered-rectangle initialization, evolve until
// ||phi_{k+1} - phi_k||_2 < vol or max_iter; mask = {phi > 0}.
SegmentationResult run_levelset(const ScalarField& f, const SolverConfig& cfg);

}  // namespace lacm
