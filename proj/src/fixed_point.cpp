#include "lacm/fixed_point.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "solver_common.hpp"

namespace lacm {

double imshrink(double x, double threshold) {
    double m = std::min(std::abs(x), threshold);
    return x < 0.0 ? -m : m;
}

GradPair fp_b_update(const ScalarField& phi, const GradPair& b_prev, double t, double lambda,
                     const ScalarField* g) {
    GradPair gp = grad_forward(phi);
    GradPair b{ScalarField(phi.width, phi.height), ScalarField(phi.width, phi.height)};
    for (size_t p = 0; p < b.gx.values.size(); ++p) {
        double thr = (g ? g->values[p] : 1.0) / lambda;
        b.gx.values[p] = t * b_prev.gx.values[p] +
                         (1.0 - t) * imshrink(gp.gx.values[p] + b_prev.gx.values[p], thr);
        b.gy.values[p] = t * b_prev.gy.values[p] +
                         (1.0 - t) * imshrink(gp.gy.values[p] + b_prev.gy.values[p], thr);
    }
    return b;
}

ScalarField fp1_phi_update(const ScalarField& phi, const ScalarField& eta, const GradPair& b,
                           double mu, double alpha, double lambda) {
    ScalarField div = div_adjoint(b);
    ScalarField out(phi.width, phi.height);
    const double k1 = mu / alpha, k2 = lambda / alpha;
    for (size_t p = 0; p < out.values.size(); ++p)
        out.values[p] = std::clamp(phi.values[p] - k1 * eta.values[p] - k2 * div.values[p], 0.0, 1.0);
    return out;
}

VarphiUpdate fp2_varphi_update(const ScalarField& phi, const ScalarField& c_prev,
                               const ScalarField& eta, double mu, double alpha) {
    VarphiUpdate r{ScalarField(phi.width, phi.height), ScalarField(phi.width, phi.height)};
    const double k = mu / alpha;
    for (size_t p = 0; p < phi.values.size(); ++p) {
        double v = std::clamp(phi.values[p] - c_prev.values[p] - k * eta.values[p], 0.0, 1.0);
        r.varphi.values[p] = v;
        r.c.values[p] = c_prev.values[p] + v - phi.values[p];
    }
    return r;
}

ScalarField fp2_phi_update(const ScalarField& phi, const ScalarField& c, const GradPair& b,
                           double alpha, double lambda) {
    ScalarField div = div_adjoint(b);
    ScalarField out(phi.width, phi.height);
    const double k = lambda / alpha;
    for (size_t p = 0; p < out.values.size(); ++p)
        out.values[p] = std::clamp(phi.values[p] + c.values[p] - k * div.values[p], 0.0, 1.0);
    return out;
}

namespace {

double max_abs(const GradPair& b) {
    double m = 0.0;
    for (double v : b.gx.values) m = std::max(m, std::abs(v));
    for (double v : b.gy.values) m = std::max(m, std::abs(v));
    return m;
}

SegmentationResult run_fp(const ScalarField& f, const SolverConfig& cfg, bool splitting) {
    cfg.validate();
    auto t0 = std::chrono::steady_clock::now();

    detail::ConvexSetup setup = detail::convex_setup(f, cfg);
    const int h = f.height, w = f.width;
    ScalarField phi = setup.phi0;
    GradPair b{ScalarField(w, h), ScalarField(w, h)};
    ScalarField c(w, h);  // fp2 Bregman variable, stays zero for fp1
    const ScalarField* gptr = cfg.fp_unweighted_shrink ? nullptr : &setup.g;
    const double b_bound = std::max(1.0 / cfg.lambda, 0.0) + 1.0;

    SegmentationResult res;
    for (int it = 0; it < cfg.max_iter; ++it) {
        ScalarField hm = detail::membership_field(phi, cfg);
        RegionStats stats = update_region_means(f, hm, setup.kern);
        ScalarField eta = eta_field(f, stats, setup.kern, cfg.eta_literal);

        ScalarField phi_outer = phi;
        for (int in_it = 0; in_it < cfg.inner_max; ++in_it) {
            ScalarField phi_next(w, h);
            if (splitting) {
                VarphiUpdate vu = fp2_varphi_update(phi, c, eta, cfg.mu, cfg.alpha);
                c = std::move(vu.c);
                b = fp_b_update(phi, b, cfg.t, cfg.lambda, gptr);
                phi_next = fp2_phi_update(phi, c, b, cfg.alpha, cfg.lambda);
            } else {
                b = fp_b_update(phi, b, cfg.t, cfg.lambda, gptr);
                phi_next = fp1_phi_update(phi_outer, eta, b, cfg.mu, cfg.alpha, cfg.lambda);
            }
            res.b_inf_max = std::max(res.b_inf_max, max_abs(b));
            if (res.b_inf_max > b_bound)
                throw std::runtime_error("fp solver: |b| exceeded its nonexpansiveness bound");
            double dr = l2_diff(phi_next, phi);
            phi = std::move(phi_next);
            if (dr < cfg.inner_tol) break;
        }

        double r = l2_diff(phi, phi_outer);
        res.residuals.push_back(r);
        res.iterations = it + 1;
        if (r < cfg.vol) break;
    }

    res.mask = detail::threshold_mask(phi, cfg.gamma);
    res.phi = std::move(phi);
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

}  // namespace

SegmentationResult run_fp1(const ScalarField& f, const SolverConfig& cfg) {
    return run_fp(f, cfg, false);
}

SegmentationResult run_fp2(const ScalarField& f, const SolverConfig& cfg) {
    return run_fp(f, cfg, true);
}

}  // namespace lacm
