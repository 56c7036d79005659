#pragma once

#include <string>
#include <vector>

#include "lacm/config.hpp"
#include "lacm/synth.hpp"

namespace lacm {

// 8-bit convention used everywhere an image crosses the solver boundary:
// round, clip to [0,255], floor zeros to 1 (the model needs f > 0). Clipping
// rather than rescaling keeps phi0 = f/max(f) meaningful for speckle
// overshoots.
ScalarField quantize8(const ScalarField& f);

// 3x3 replicate-padded arithmetic mean (one multilook step, ENL x9).
ScalarField multilook3(const ScalarField& f);

// 3x3 geometric mean: exp of the boxcar of log(max(f,1e-12)).
ScalarField geo3(const ScalarField& f);

// Single-look despeckling used by the convex solvers at looks=1:
// arithmetic multilook then geometric mean.
ScalarField despeckle_l1(const ScalarField& f);

// Dispatch on cfg.solver.
SegmentationResult run_solver(const ScalarField& f, const SolverConfig& cfg);

// Per-look parameter profile (the bench/acceptance defaults). looks = 0 means
// noise-free. Convex solvers at looks=1 get despeckle=true plus the stronger
// data weights; the level-set solver always runs on the raw image.
struct RunPlan {
    SolverConfig cfg;
    bool despeckle = false;
};
RunPlan plan_for(SolverKind kind, int looks);

// quantize8 -> optional despeckle (re-quantized) -> run_solver.
SegmentationResult run_plan(const ScalarField& observed, const RunPlan& plan);

struct BenchRow {
    std::string solver;
    std::string image;
    int looks = 0;
    int iterations = 0;
    double seconds = 0.0;
    double dsc = 0.0;
    double pp = 0.0;
};

// One row per (solver, looks): disk phantom with ramp shading, DSC vs truth,
// PP on the quantized observed image.
std::vector<BenchRow> run_bench(const std::vector<SolverKind>& solvers,
                                const std::vector<int>& looks_list, uint64_t seed, int size);

}  // namespace lacm
