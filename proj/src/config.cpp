#include "lacm/config.hpp"

#include <stdexcept>

namespace lacm {

SolverKind solver_from_name(const std::string& name) {
    if (name == "levelset") return SolverKind::levelset;
    if (name == "sb") return SolverKind::sb;
    if (name == "fp1") return SolverKind::fp1;
    if (name == "fp2") return SolverKind::fp2;
    throw std::invalid_argument("unknown solver '" + name + "' (expected levelset, sb, fp1 or fp2)");
}

std::string solver_name(SolverKind k) {
    switch (k) {
        case SolverKind::levelset: return "levelset";
        case SolverKind::sb: return "sb";
        case SolverKind::fp1: return "fp1";
        case SolverKind::fp2: return "fp2";
    }
    return "?";
}

SolverConfig SolverConfig::defaults(SolverKind k) {
    SolverConfig c;
    c.solver = k;
    switch (k) {
        case SolverKind::levelset:
            c.mu = 100.0;
            c.theta = 200.0;
            c.max_iter = 150;
            break;
        case SolverKind::sb:
            c.mu = 60.0;
            c.lambda = 1000.0;
            c.max_iter = 300;
            break;
        case SolverKind::fp1:
            c.mu = 2.0;
            c.lambda = 1.0;
            c.max_iter = 60;
            break;
        case SolverKind::fp2:
            c.mu = 1.0;
            c.lambda = 1.0;
            c.max_iter = 60;
            break;
    }
    return c;
}

void SolverConfig::validate() const {
    auto fail = [](const std::string& msg) { throw std::invalid_argument("config: " + msg); };
    if (sigma <= 0.0) fail("sigma must be > 0");
    if (radius < 1) fail("radius must be >= 1");
    if (beta <= 0.0) fail("beta must be > 0");
    if (isef_sigma <= 0.0) fail("isef-sigma must be > 0");
    if (isef_size < 1 || isef_size % 2 == 0) fail("isef-size must be odd and positive");
    if (gamma <= 0.0 || gamma >= 1.0) fail("gamma must be in (0,1)");
    if (eps <= 0.0) fail("eps must be > 0");
    if (vol < 0.0) fail("vol must be >= 0");
    if (max_iter < 0) fail("max-iter must be >= 0");
    if (lambda <= 0.0) fail("lambda must be > 0");
    if (solver == SolverKind::levelset) {
        if (dt <= 0.0) fail("dt must be > 0");
    }
    if (solver == SolverKind::fp1 || solver == SolverKind::fp2) {
        if (alpha <= 0.0) fail("alpha must be > 0");
        if (lambda / alpha >= 0.25) fail("lambda/alpha must be < 1/4 (fixed-point nonexpansiveness)");
        if (t <= 0.0 || t >= 1.0) fail("t must be in (0,1)");
        if (inner_tol < 0.0) fail("inner-tol must be >= 0");
        if (inner_max < 1) fail("inner-max must be >= 1");
    }
}

}  // namespace lacm
