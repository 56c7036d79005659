#pragma once

#include <cstdint>
#include <string>

#include "lacm/field.hpp"

namespace lacm {

// Self-contained deterministic RNG (SplitMix64-seeded xoshiro256++), so
// phantom reproducibility does not depend on library implementation details.
struct Rng {
    uint64_t s[4];
    explicit Rng(uint64_t seed);
    uint64_t next();
    double uniform();  // strictly inside (0,1)
    double normal();   // standard normal
};

// i.i.d. Gamma(shape=looks, scale=1/looks) field: mean 1, variance 1/looks.
// Sum of exponentials for small integer looks, Marsaglia-Tsang otherwise.
ScalarField gamma_speckle(int width, int height, int looks, uint64_t seed);

enum class Layout { disk, ring, two_blob };
enum class Shading { none, ramp, bump };

Layout layout_from_name(const std::string& name);
std::string layout_name(Layout l);
Shading shading_from_name(const std::string& name);
std::string shading_name(Shading s);

struct PhantomSpec {
    Layout layout = Layout::disk;
    int size = 125;
    double level_fg = 180.0;  // foreground gray level
    double level_bg = 60.0;   // background gray level
    Shading shading = Shading::ramp;
    double amplitude = 0.5;   // shading factor spans [1-a, 1+a]
    int looks = 1;
    bool noiseless = false;   // skip the speckle factor (observed = clean * shading)
    uint64_t seed = 42;
};

struct Phantom {
    ScalarField clean;     // piecewise-constant truth
    ScalarField shading;   // multiplicative shading field (> 0)
    ScalarField observed;  // clean * shading * speckle
    BinaryMask truth;      // foreground mask of clean
    int looks = 1;
    uint64_t seed = 0;
};

Phantom make_phantom(const PhantomSpec& spec);

}  // namespace lacm
