#include "lacm/field.hpp"

#include <algorithm>
#include <cmath>

namespace lacm {

double ScalarField::min() const {
    return *std::min_element(values.begin(), values.end());
}

double ScalarField::max() const {
    return *std::max_element(values.begin(), values.end());
}

double ScalarField::sum() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
}

size_t BinaryMask::count() const {
    size_t n = 0;
    for (uint8_t v : values) n += v ? 1 : 0;
    return n;
}

GradPair grad_forward(const ScalarField& u) {
    const int h = u.height, w = u.width;
    GradPair g{ScalarField(w, h), ScalarField(w, h)};
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < w; ++j) {
            g.gx.at(i, j) = (j < w - 1) ? u.at(i, j + 1) - u.at(i, j) : 0.0;
            g.gy.at(i, j) = (i < h - 1) ? u.at(i + 1, j) - u.at(i, j) : 0.0;
        }
    }
    return g;
}

ScalarField div_adjoint(const GradPair& g) {
    if (!g.gx.same_shape(g.gy))
        throw std::invalid_argument("div_adjoint: component shape mismatch");
    const int h = g.gx.height, w = g.gx.width;
    ScalarField out(w, h);
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < w; ++j) {
            double a = 0.0;
            if (j > 0) a += g.gx.at(i, j - 1);
            if (j < w - 1) a -= g.gx.at(i, j);
            if (i > 0) a += g.gy.at(i - 1, j);
            if (i < h - 1) a -= g.gy.at(i, j);
            out.at(i, j) = a;
        }
    }
    return out;
}

double laplacian_neighbors(const ScalarField& u, int i, int j) {
    const int h = u.height, w = u.width;
    double up = u.at(i > 0 ? i - 1 : i, j);
    double down = u.at(i < h - 1 ? i + 1 : i, j);
    double left = u.at(i, j > 0 ? j - 1 : j);
    double right = u.at(i, j < w - 1 ? j + 1 : j);
    return up + down + left + right;
}

ScalarField clip01(ScalarField u) {
    for (double& v : u.values) v = std::clamp(v, 0.0, 1.0);
    return u;
}

double inner(const ScalarField& u, const ScalarField& v) {
    if (!u.same_shape(v)) throw std::invalid_argument("inner: shape mismatch");
    double s = 0.0;
    for (size_t k = 0; k < u.values.size(); ++k) s += u.values[k] * v.values[k];
    return s;
}

double l2_diff(const ScalarField& a, const ScalarField& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("l2_diff: shape mismatch");
    double s = 0.0;
    for (size_t k = 0; k < a.values.size(); ++k) {
        double d = a.values[k] - b.values[k];
        s += d * d;
    }
    return std::sqrt(s);
}

}  // namespace lacm
