#include "lacm/pipeline.hpp"

#include <cmath>

#include "lacm/fixed_point.hpp"
#include "lacm/levelset.hpp"
#include "lacm/metrics.hpp"
#include "lacm/split_bregman.hpp"

namespace lacm {

ScalarField quantize8(const ScalarField& f) {
    ScalarField out(f.width, f.height);
    for (size_t p = 0; p < f.values.size(); ++p) {
        double v = std::rint(f.values[p]);
        if (v < 0.0) v = 0.0;
        if (v > 255.0) v = 255.0;
        out.values[p] = std::max(v, 1.0);
    }
    return out;
}

namespace {

inline int clampi(int v, int lo, int hi) { return v < lo ? lo : (v > hi ? hi : v); }

ScalarField box3(const ScalarField& f) {
    const int h = f.height, w = f.width;
    ScalarField out(w, h);
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < w; ++j) {
            double s = 0.0;
            for (int a = -1; a <= 1; ++a)
                for (int b = -1; b <= 1; ++b)
                    s += f.at(clampi(i + a, 0, h - 1), clampi(j + b, 0, w - 1));
            out.at(i, j) = s / 9.0;
        }
    }
    return out;
}

}  // namespace

ScalarField multilook3(const ScalarField& f) { return box3(f); }

ScalarField geo3(const ScalarField& f) {
    ScalarField lg(f.width, f.height);
    for (size_t p = 0; p < f.values.size(); ++p)
        lg.values[p] = std::log(std::max(f.values[p], 1e-12));
    ScalarField sm = box3(lg);
    for (double& v : sm.values) v = std::exp(v);
    return sm;
}

ScalarField despeckle_l1(const ScalarField& f) { return geo3(multilook3(f)); }

SegmentationResult run_solver(const ScalarField& f, const SolverConfig& cfg) {
    switch (cfg.solver) {
        case SolverKind::levelset: return run_levelset(f, cfg);
        case SolverKind::sb: return run_sb_lacm(f, cfg);
        case SolverKind::fp1: return run_fp1(f, cfg);
        case SolverKind::fp2: return run_fp2(f, cfg);
    }
    throw std::invalid_argument("run_solver: unknown solver");
}

RunPlan plan_for(SolverKind kind, int looks) {
    RunPlan plan{SolverConfig::defaults(kind), false};
    if (kind == SolverKind::levelset) {
        plan.cfg.theta = looks >= 2 ? 10.0 : 200.0;
        return plan;
    }
    // convex solvers: noise-free keeps the defaults; speckled input gets the
    // stronger data weights, plus despeckling at looks=1
    if (looks >= 1) {
        bool single = looks == 1;
        switch (kind) {
            case SolverKind::sb:
                // single-look: run a gentler data weight to convergence
                // instead of early-stopping a strong one (the strong-weight
                // path is seed-sensitive against residual speckle)
                plan.cfg.mu = single ? 8.0 : 200.0;
                if (single) plan.cfg.vol = 0.1;
                break;
            case SolverKind::fp1: plan.cfg.mu = single ? 4.0 : 8.0; break;
            case SolverKind::fp2: plan.cfg.mu = 4.0; break;
            default: break;
        }
        plan.despeckle = single;
    }
    return plan;
}

SegmentationResult run_plan(const ScalarField& observed, const RunPlan& plan) {
    ScalarField f = quantize8(observed);
    if (plan.despeckle) f = quantize8(despeckle_l1(f));
    return run_solver(f, plan.cfg);
}

std::vector<BenchRow> run_bench(const std::vector<SolverKind>& solvers,
                                const std::vector<int>& looks_list, uint64_t seed, int size) {
    std::vector<BenchRow> rows;
    for (int looks : looks_list) {
        PhantomSpec spec;
        spec.size = size;
        spec.looks = std::max(looks, 1);
        spec.noiseless = looks == 0;
        spec.seed = seed + static_cast<uint64_t>(looks);
        Phantom ph = make_phantom(spec);
        ScalarField observed_q = quantize8(ph.observed);
        for (SolverKind kind : solvers) {
            SegmentationResult r = run_plan(ph.observed, plan_for(kind, looks));
            BenchRow row;
            row.solver = solver_name(kind);
            row.image = layout_name(spec.layout);
            row.looks = looks;
            row.iterations = r.iterations;
            row.seconds = r.seconds;
            row.dsc = dsc(r.mask, ph.truth);
            row.pp = pp_uniformity(observed_q, r.mask);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace lacm
