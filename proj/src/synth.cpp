#include "lacm/synth.hpp"

#include <cmath>
#include <stdexcept>

namespace lacm {

namespace {

inline uint64_t splitmix64(uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(uint64_t seed) {
    uint64_t x = seed;
    for (auto& w : s) w = splitmix64(x);
}

uint64_t Rng::next() {
    uint64_t r = rotl(s[0] + s[3], 23) + s[0];
    uint64_t t = s[1] << 17;
    s[2] ^= s[0];
    s[3] ^= s[1];
    s[1] ^= s[2];
    s[0] ^= s[3];
    s[2] ^= t;
    s[3] = rotl(s[3], 45);
    return r;
}

double Rng::uniform() {
    // midpoint of a 53-bit lattice: never 0 or 1, so log() is safe
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1p-53;
}

double Rng::normal() {
    double u1 = uniform(), u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

namespace {

// Marsaglia-Tsang sampler for Gamma(shape k >= 1, scale 1).
double gamma_mt(Rng& rng, double k) {
    const double d = k - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = rng.normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        double u = rng.uniform();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

}  // namespace

ScalarField gamma_speckle(int width, int height, int looks, uint64_t seed) {
    if (looks < 1) throw std::invalid_argument("gamma_speckle: looks must be >= 1");
    Rng rng(seed);
    ScalarField out(width, height);
    if (looks <= 64) {
        for (double& v : out.values) {
            double s = 0.0;
            for (int l = 0; l < looks; ++l) s -= std::log(rng.uniform());
            v = s / looks;
        }
    } else {
        for (double& v : out.values) v = gamma_mt(rng, looks) / looks;
    }
    return out;
}

Layout layout_from_name(const std::string& name) {
    if (name == "disk") return Layout::disk;
    if (name == "ring") return Layout::ring;
    if (name == "two-blob" || name == "two_blob") return Layout::two_blob;
    throw std::invalid_argument("unknown layout '" + name + "' (expected disk, ring or two-blob)");
}

std::string layout_name(Layout l) {
    switch (l) {
        case Layout::disk: return "disk";
        case Layout::ring: return "ring";
        case Layout::two_blob: return "two-blob";
    }
    return "?";
}

Shading shading_from_name(const std::string& name) {
    if (name == "none") return Shading::none;
    if (name == "ramp") return Shading::ramp;
    if (name == "bump") return Shading::bump;
    throw std::invalid_argument("unknown shading '" + name + "' (expected none, ramp or bump)");
}

std::string shading_name(Shading s) {
    switch (s) {
        case Shading::none: return "none";
        case Shading::ramp: return "ramp";
        case Shading::bump: return "bump";
    }
    return "?";
}

Phantom make_phantom(const PhantomSpec& spec) {
    if (spec.level_fg <= 0.0 || spec.level_bg <= 0.0)
        throw std::invalid_argument("make_phantom: gray levels must be > 0");
    if (spec.size < 8) throw std::invalid_argument("make_phantom: size must be >= 8");
    if (spec.amplitude < 0.0 || spec.amplitude >= 1.0)
        throw std::invalid_argument("make_phantom: amplitude must be in [0,1)");
    if (!spec.noiseless && spec.looks < 1)
        throw std::invalid_argument("make_phantom: looks must be >= 1");

    const int n = spec.size;
    const double cc = (n - 1) / 2.0;

    Phantom ph;
    ph.truth = BinaryMask(n, n);
    switch (spec.layout) {
        case Layout::disk: {
            double r2 = 0.28 * n * 0.28 * n;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    double d2 = (i - cc) * (i - cc) + (j - cc) * (j - cc);
                    ph.truth.at(i, j) = d2 <= r2 ? 1 : 0;
                }
            break;
        }
        case Layout::ring: {
            double ro2 = 0.34 * n * 0.34 * n, ri2 = 0.17 * n * 0.17 * n;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    double d2 = (i - cc) * (i - cc) + (j - cc) * (j - cc);
                    ph.truth.at(i, j) = (d2 <= ro2 && d2 > ri2) ? 1 : 0;
                }
            break;
        }
        case Layout::two_blob: {
            double r2 = 0.15 * n * 0.15 * n;
            double c1i = 0.32 * (n - 1), c1j = 0.34 * (n - 1);
            double c2i = 0.68 * (n - 1), c2j = 0.66 * (n - 1);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    double d1 = (i - c1i) * (i - c1i) + (j - c1j) * (j - c1j);
                    double d2 = (i - c2i) * (i - c2i) + (j - c2j) * (j - c2j);
                    ph.truth.at(i, j) = (d1 <= r2 || d2 <= r2) ? 1 : 0;
                }
            break;
        }
    }

    ph.clean = ScalarField(n, n);
    for (size_t p = 0; p < ph.clean.values.size(); ++p)
        ph.clean.values[p] = ph.truth.values[p] ? spec.level_fg : spec.level_bg;

    ph.shading = ScalarField(n, n, 1.0);
    const double a = spec.amplitude;
    if (spec.shading == Shading::ramp && a > 0.0) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                ph.shading.at(i, j) = (1.0 - a) + 2.0 * a * j / (n - 1);
    } else if (spec.shading == Shading::bump && a > 0.0) {
        const double s2 = 2.0 * (0.4 * n) * (0.4 * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double d2 = (i - cc) * (i - cc) + (j - cc) * (j - cc);
                ph.shading.at(i, j) = (1.0 - a) + 2.0 * a * std::exp(-d2 / s2);
            }
    }

    ph.observed = ScalarField(n, n);
    if (spec.noiseless) {
        for (size_t p = 0; p < ph.observed.values.size(); ++p)
            ph.observed.values[p] = ph.clean.values[p] * ph.shading.values[p];
    } else {
        ScalarField noise = gamma_speckle(n, n, spec.looks, spec.seed);
        for (size_t p = 0; p < ph.observed.values.size(); ++p)
            ph.observed.values[p] = ph.clean.values[p] * ph.shading.values[p] * noise.values[p];
    }
    ph.looks = spec.looks;
    ph.seed = spec.seed;
    return ph;
}

}  // namespace lacm
