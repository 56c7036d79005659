#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace lacm {

// Dense row-major 2-D grid of doubles. Houses images, level-set functions,
// edge maps, eta fields and all solver auxiliaries.
struct ScalarField {
    int width = 0;
    int height = 0;
    std::vector<double> values;

    ScalarField() = default;
    ScalarField(int w, int h, double fill = 0.0)
        : width(w), height(h), values(static_cast<size_t>(w) * h, fill) {
        if (w < 2 || h < 2)
            throw std::invalid_argument("ScalarField: width and height must be >= 2");
    }

    double& at(int i, int j) { return values[static_cast<size_t>(i) * width + j]; }
    double at(int i, int j) const { return values[static_cast<size_t>(i) * width + j]; }

    size_t size() const { return values.size(); }
    bool same_shape(const ScalarField& o) const { return width == o.width && height == o.height; }

    double min() const;
    double max() const;
    double sum() const;
};

// Per-axis difference pair (x = column axis, y = row axis); same dims as source.
struct GradPair {
    ScalarField gx;
    ScalarField gy;
};

// Binary segmentation mask; 1 = foreground.
struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> values;

    BinaryMask() = default;
    BinaryMask(int w, int h) : width(w), height(h), values(static_cast<size_t>(w) * h, 0) {}

    uint8_t& at(int i, int j) { return values[static_cast<size_t>(i) * width + j]; }
    uint8_t at(int i, int j) const { return values[static_cast<size_t>(i) * width + j]; }
    size_t count() const;
    bool operator==(const BinaryMask& o) const = default;
};

// Forward differences with replicate boundary: gx[i,j] = u[i,j+1] - u[i,j]
// (0 at the last column), gy[i,j] = u[i+1,j] - u[i,j] (0 at the last row).
GradPair grad_forward(const ScalarField& u);

// Exact matrix adjoint of grad_forward under <u,v> = sum(u*v):
// returns grad_x^T(gx) + grad_y^T(gy). Coincides with backward differences
// in the interior.
ScalarField div_adjoint(const GradPair& g);

// Replicate-boundary 4-neighbor sum u[i-1,j]+u[i+1,j]+u[i,j-1]+u[i,j+1].
double laplacian_neighbors(const ScalarField& u, int i, int j);

// Clamp every value to [0,1].
ScalarField clip01(ScalarField u);

// Discrete inner product sum(u*v); throws on shape mismatch.
double inner(const ScalarField& u, const ScalarField& v);

// L2 norm of (a - b) over pixels; the solvers' stopping residual.
double l2_diff(const ScalarField& a, const ScalarField& b);

}  // namespace lacm
