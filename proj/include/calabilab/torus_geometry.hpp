#pragma once

#include "calabilab/periodic_field.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace calabilab {

/// Flat complex 1-torus C/(L1 Z + i L2 Z) with background density 1.
/// There are no holomorphic fields with zeros here, and S_bar = 0.
struct TorusModel {
    double L1 = 0.0, L2 = 0.0;
    int n = 0;
    double s_bar = 0.0; // Euler characteristic zero

    TorusModel(double L1_, double L2_, int n_);

    double volume() const { return L1 * L2; }
    PeriodicField zero_field() const { return PeriodicField(n, L1, L2); }
};

/// Kaehler metric determined by a periodic potential: density h = 1 + Lap(phi)/4,
/// volume form h dx dy, cached scalar curvature S = -(1/h) Lap(log h).
struct MetricState {
    TorusModel model;
    PeriodicField phi;
    PeriodicField h;
    PeriodicField scalar_curv;
    double min_h = 0.0;
};

/// Builds the metric state; throws PositivityError if min(h) <= delta_pos.
MetricState density_from_potential(const TorusModel& model, const PeriodicField& phi,
                                   double delta_pos = 1e-6);

PeriodicField scalar_curvature(const MetricState& state);

/// L2 inner product with the state's volume form h dx dy.
double inner_product(const MetricState& state, const PeriodicField& f, const PeriodicField& g);

/// Fourth-order Lichnerowicz operator of the state's metric:
/// quadratic form integral |f_zz - (d_z log h) f_z|^2_g h dx dy. Self-adjoint
/// and positive semidefinite for the inner product above; kernel = constants.
PeriodicField lichnerowicz_apply(const MetricState& state, const PeriodicField& f);

/// Precomputed pieces of the operator for repeated applications (eigensolves).
struct LichnerowiczContext {
    explicit LichnerowiczContext(const MetricState& state);
    PeriodicField apply(const PeriodicField& f) const;

    int n;
    double L1, L2;
    PeriodicField h;
    spectral::Cvec a;      // d_z log h
    spectral::Cvec a_conj;
    std::vector<double> inv_h4; // 4/h
};

/// |LHS - RHS| / (|LHS| + |RHS| + 1) for the curvature commutation identity
/// integral |f_{i jbar}|^2 = integral |f_{ij}|^2 + integral R^{i jbar} f_i f_jbar,
/// all three terms quadratured independently.
double ricci_identity_residual(const MetricState& state, const PeriodicField& f);

} // namespace calabilab
