#pragma once

#include <string>

#include "lacm/field.hpp"

namespace lacm {

enum class SolverKind { levelset, sb, fp1, fp2 };

enum class StatsMembership {
    mask,  // h = 1{phi > gamma} (default for the convex solvers)
    phi,   // h = relaxed phi itself
};

SolverKind solver_from_name(const std::string& name);  // throws on unknown name
std::string solver_name(SolverKind k);

// Every tunable of every solver. Construct via defaults(kind) to get the
// per-solver parameter set, then override what you need; validate() is called
// by the run_* entry points.
struct SolverConfig {
    SolverKind solver = SolverKind::sb;

    // local statistics + edge map
    double sigma = 15.0;      // Gaussian sigma of the region-fitting kernel
    int radius = 45;          // fitting kernel truncation radius (3 sigma)
    double beta = 20.0;       // edge detector sharpness
    double isef_sigma = 1.2;  // ISEF scale
    int isef_size = 15;       // ISEF kernel size (odd)

    // shared solver knobs
    double mu = 60.0;      // data term weight
    double gamma = 0.5;    // mask threshold for the convex solvers
    double vol = 1.0;      // stop when ||phi_{k+1} - phi_k||_2 < vol
    int max_iter = 300;    // outer iteration backstop
    double eps = 1.0;      // Heaviside/delta smoothing

    // level-set
    double theta = 200.0;  // edge/length weight
    double nu = 0.2;       // distance regularization weight
    double dt = 1.0;       // explicit Euler step

    // split Bregman / fixed point
    double lambda = 1000.0;  // TV split weight
    double alpha = 12.0;     // proximal weight (fp1/fp2); requires lambda/alpha < 1/4
    double t = 1e-5;         // fp relaxation parameter, in (0,1)
    double inner_tol = 0.1;  // fp inner loop: stop when ||dphi||_2 < inner_tol
    int inner_max = 400;     // fp inner loop backstop

    // behavior switches
    bool eta_literal = false;                              // source text's literal eta formula
    StatsMembership membership = StatsMembership::mask;    // convex solvers' stats membership
    bool fp_unweighted_shrink = false;                     // literal 1/lambda threshold in fp b-update

    static SolverConfig defaults(SolverKind k);

    // Throws std::invalid_argument describing the first violated constraint.
    void validate() const;
};

// Final state of a solver run.
struct SegmentationResult {
    ScalarField phi;
    BinaryMask mask;
    int iterations = 0;              // outer iterations performed
    double seconds = 0.0;            // wall-clock solve time
    std::vector<double> residuals;   // ||phi_{k+1} - phi_k||_2 per outer iteration
    double b_inf_max = 0.0;          // fp solvers: max |b| seen (boundedness monitor)

    double final_residual() const { return residuals.empty() ? 0.0 : residuals.back(); }
};

}  // namespace lacm
