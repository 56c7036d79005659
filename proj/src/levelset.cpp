#include "lacm/levelset.hpp"

#include <chrono>
#include <cmath>

namespace lacm {

namespace {

ScalarField heaviside_field(const ScalarField& phi, double eps) {
    ScalarField h(phi.width, phi.height);
    for (size_t p = 0; p < phi.values.size(); ++p)
        h.values[p] = heaviside_eps(phi.values[p], eps);
    return h;
}

RegionStats stats_from_phi(const ScalarField& f, const ScalarField& phi, const SolverConfig& cfg) {
    Kernel2D k = gaussian_kernel(cfg.sigma, cfg.radius);
    return update_region_means(f, heaviside_field(phi, cfg.eps), k);
}

inline int clampi(int v, int lo, int hi) { return v < lo ? lo : (v > hi ? hi : v); }

// Central difference along columns (x) / rows (y) with replicate boundary.
void central_diff(const ScalarField& u, ScalarField& dx, ScalarField& dy) {
    const int h = u.height, w = u.width;
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < w; ++j) {
            dx.at(i, j) = 0.5 * (u.at(i, clampi(j + 1, 0, w - 1)) - u.at(i, clampi(j - 1, 0, w - 1)));
            dy.at(i, j) = 0.5 * (u.at(clampi(i + 1, 0, h - 1), j) - u.at(clampi(i - 1, 0, h - 1), j));
        }
    }
}

}  // namespace

LevelSetState init_binary(const ScalarField& f, const Rect& rect, const SolverConfig& cfg) {
    const int h = f.height, w = f.width;
    if (rect.r0 < 0 || rect.c0 < 0 || rect.r1 >= h || rect.c1 >= w ||
        rect.r0 > rect.r1 || rect.c0 > rect.c1)
        throw std::invalid_argument("init_binary: rectangle out of bounds or empty");
    if (rect.r0 == 0 && rect.c0 == 0 && rect.r1 == h - 1 && rect.c1 == w - 1)
        throw std::invalid_argument("init_binary: rectangle covers the whole image (no background)");
    LevelSetState s;
    s.phi = ScalarField(w, h, -1.0);
    for (int i = rect.r0; i <= rect.r1; ++i)
        for (int j = rect.c0; j <= rect.c1; ++j)
            s.phi.at(i, j) = 1.0;
    s.stats = stats_from_phi(f, s.phi, cfg);
    s.iter = 0;
    return s;
}

LevelSetState evolve_step(const LevelSetState& state, const ScalarField& f,
                          const ScalarField& g, const SolverConfig& cfg) {
    const ScalarField& phi = state.phi;
    const int h = phi.height, w = phi.width;

    Kernel2D k = gaussian_kernel(cfg.sigma, cfg.radius);
    RegionStats stats = update_region_means(f, heaviside_field(phi, cfg.eps), k);
    ScalarField eta = eta_field(f, stats, k, cfg.eta_literal);

    ScalarField px(w, h), py(w, h), nx(w, h), ny(w, h), mag(w, h);
    central_diff(phi, px, py);
    for (size_t p = 0; p < phi.values.size(); ++p) {
        double m = std::sqrt(px.values[p] * px.values[p] + py.values[p] * py.values[p] + 1e-10);
        mag.values[p] = m;
        nx.values[p] = px.values[p] / m;
        ny.values[p] = py.values[p] / m;
    }

    // kappa = div(n) and grad(g), both by central differences
    ScalarField kappa(w, h), dnx_x(w, h), dnx_y(w, h), dny_x(w, h), dny_y(w, h);
    central_diff(nx, dnx_x, dnx_y);
    central_diff(ny, dny_x, dny_y);
    for (size_t p = 0; p < kappa.values.size(); ++p)
        kappa.values[p] = dnx_x.values[p] + dny_y.values[p];
    ScalarField ggx(w, h), ggy(w, h);
    central_diff(g, ggx, ggy);

    LevelSetState out;
    out.phi = ScalarField(w, h);
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < w; ++j) {
            double p = phi.at(i, j);
            double geo = g.at(i, j) * kappa.at(i, j) +
                         (ggx.at(i, j) * px.at(i, j) + ggy.at(i, j) * py.at(i, j)) / mag.at(i, j);
            double lap = laplacian_neighbors(phi, i, j) - 4.0 * p;
            double rhs = delta_eps(p, cfg.eps) * (cfg.theta * geo - cfg.mu * eta.at(i, j)) +
                         cfg.nu * (lap - kappa.at(i, j));
            out.phi.at(i, j) = p + cfg.dt * rhs;
        }
    }
    out.stats = std::move(stats);
    out.iter = state.iter + 1;
    return out;
}

SegmentationResult run_levelset(const ScalarField& f, const SolverConfig& cfg) {
    cfg.validate();
    auto t0 = std::chrono::steady_clock::now();

    // normalize by the max so c*f runs bitwise-identically to f (eta is
    // scale-free anyway; without this, ulp-level stats noise can flip a
    // near-zero pixel over many Euler steps)
    double m = f.max();
    if (m <= 0.0) throw std::invalid_argument("run_levelset: image max must be positive");
    ScalarField fn(f.width, f.height);
    for (size_t p = 0; p < f.values.size(); ++p) fn.values[p] = f.values[p] / m;

    const int h = f.height, w = f.width;
    Rect rect{h / 4, w / 4, 3 * h / 4 - 1, 3 * w / 4 - 1};
    LevelSetState state = init_binary(fn, rect, cfg);
    Kernel2D isef = isef_kernel(cfg.isef_sigma, cfg.isef_size);
    ScalarField g = edge_detector_normalized(fn, cfg.beta, isef);

    SegmentationResult res;
    for (int it = 0; it < cfg.max_iter; ++it) {
        LevelSetState next = evolve_step(state, fn, g, cfg);
        double r = l2_diff(next.phi, state.phi);
        res.residuals.push_back(r);
        state = std::move(next);
        res.iterations = it + 1;
        if (r < cfg.vol) break;
    }

    res.phi = std::move(state.phi);
    res.mask = BinaryMask(w, h);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < w; ++j)
            res.mask.at(i, j) = res.phi.at(i, j) > 0.0 ? 1 : 0;
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

}  // namespace lacm
