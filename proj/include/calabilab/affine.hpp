#pragma once

#include <array>
#include <cmath>

namespace calabilab {

/// Affine function a0 + <a, x> on momentum coordinates; holomorphy potentials
/// of toric vector fields live here. Evaluation is exact.
struct AffineFunction {
    int dim = 1;
    double a0 = 0.0;
    std::array<double, 2> a{0.0, 0.0};

    static AffineFunction constant(int dim, double c) {
        AffineFunction f;
        f.dim = dim;
        f.a0 = c;
        return f;
    }
    static AffineFunction coordinate(int dim, int axis, double scale = 1.0) {
        AffineFunction f;
        f.dim = dim;
        f.a[axis] = scale;
        return f;
    }

    double operator()(double x) const { return a0 + a[0] * x; }
    double operator()(double x, double y) const { return a0 + a[0] * x + a[1] * y; }
    double eval(const double* x) const {
        double s = a0;
        for (int i = 0; i < dim; ++i) s += a[i] * x[i];
        return s;
    }

    bool is_constant(double tol = 1e-12) const {
        double g = 0.0;
        for (int i = 0; i < dim; ++i) g = std::max(g, std::abs(a[i]));
        return g <= tol * (1.0 + std::abs(a0));
    }

    AffineFunction shifted(double c) const {
        AffineFunction f = *this;
        f.a0 += c;
        return f;
    }
};

} // namespace calabilab
