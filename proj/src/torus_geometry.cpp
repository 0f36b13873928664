#include "calabilab/torus_geometry.hpp"

#include "calabilab/errors.hpp"

#include <cmath>
#include <string>

namespace calabilab {

TorusModel::TorusModel(double L1_, double L2_, int n_) : L1(L1_), L2(L2_), n(n_) {
    if (!(L1 > 0.0) || !(L2 > 0.0)) throw ConfigError("torus periods must be positive");
    if (n <= 0 || (n & (n - 1)) != 0)
        throw ConfigError("torus grid size must be a power of two, got " + std::to_string(n));
    // Background volume and curvature average are structural on this testbed.
    if (s_bar != 0.0) throw ConfigError("torus: S_bar must vanish");
}

namespace {

PeriodicField log_field(const PeriodicField& h) {
    PeriodicField r = h;
    for (double& x : r.v) x = std::log(x);
    return r;
}

} // namespace

MetricState density_from_potential(const TorusModel& model, const PeriodicField& phi,
                                   double delta_pos) {
    if (phi.n != model.n || phi.L1 != model.L1 || phi.L2 != model.L2)
        throw ConfigError("density_from_potential: potential grid does not match model");
    if (!phi.all_finite()) throw DomainError("density_from_potential: potential not finite");

    PeriodicField lap = spectral::apply_multiplier(
        phi, spectral::laplacian_symbol(model.n, model.L1, model.L2));
    PeriodicField h(model.n, model.L1, model.L2);
    for (std::size_t i = 0; i < h.v.size(); ++i) h.v[i] = 1.0 + 0.25 * lap.v[i];

    const double mh = h.min_value();
    if (mh <= delta_pos)
        throw PositivityError("Kaehler positivity violated: min density " +
                                  std::to_string(mh) + " <= guard " + std::to_string(delta_pos),
                              mh);

    MetricState st{model, phi, h, PeriodicField(model.n, model.L1, model.L2), mh};
    PeriodicField laplog = spectral::apply_multiplier(
        log_field(h), spectral::laplacian_symbol(model.n, model.L1, model.L2));
    for (std::size_t i = 0; i < h.v.size(); ++i)
        st.scalar_curv.v[i] = -laplog.v[i] / h.v[i];
    return st;
}

PeriodicField scalar_curvature(const MetricState& state) { return state.scalar_curv; }

double inner_product(const MetricState& state, const PeriodicField& f, const PeriodicField& g) {
    return integrate_torus(pointwise_multiply(f, g), state.h);
}

LichnerowiczContext::LichnerowiczContext(const MetricState& state)
    : n(state.model.n), L1(state.model.L1), L2(state.model.L2), h(state.h) {
    PeriodicField lh = state.h;
    for (double& x : lh.v) x = std::log(x);
    a = spectral::dz(spectral::to_complex(lh), n, L1, L2);
    a_conj.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) a_conj[i] = std::conj(a[i]);
    inv_h4.resize(h.v.size());
    for (std::size_t i = 0; i < h.v.size(); ++i) inv_h4[i] = 4.0 / h.v[i];
}

PeriodicField LichnerowiczContext::apply(const PeriodicField& f) const {
    using spectral::Cvec;
    Cvec fc = spectral::to_complex(f);
    Cvec fz = spectral::dz(fc, n, L1, L2);
    Cvec fzz = spectral::dz(fz, n, L1, L2);
    // w = (4/h) * (f_zz - a f_z): the (2,0) covariant Hessian with raised weight
    Cvec w(fc.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] = inv_h4[i] * (fzz[i] - a[i] * fz[i]);
    // L f = (1/h) Re[ dzbar^2 w + dzbar(conj(a) w) ]  (weak-form adjoint)
    Cvec t1 = spectral::dzbar(spectral::dzbar(w, n, L1, L2), n, L1, L2);
    Cvec aw(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) aw[i] = a_conj[i] * w[i];
    Cvec t2 = spectral::dzbar(aw, n, L1, L2);
    PeriodicField out(n, L1, L2);
    for (std::size_t i = 0; i < out.v.size(); ++i)
        out.v[i] = (t1[i].real() + t2[i].real()) / h.v[i];
    return out;
}

PeriodicField lichnerowicz_apply(const MetricState& state, const PeriodicField& f) {
    if (!f.same_grid(state.phi)) throw ConfigError("lichnerowicz_apply: grid mismatch");
    return LichnerowiczContext(state).apply(f);
}

double ricci_identity_residual(const MetricState& state, const PeriodicField& f) {
    using spectral::Cvec;
    const int n = state.model.n;
    const double L1 = state.model.L1, L2 = state.model.L2;

    Cvec fc = spectral::to_complex(f);
    Cvec fz = spectral::dz(fc, n, L1, L2);
    Cvec fzz = spectral::dz(fz, n, L1, L2);
    Cvec fzzb = spectral::dzbar(fz, n, L1, L2);

    PeriodicField lh = state.h;
    for (double& x : lh.v) x = std::log(x);
    Cvec a = spectral::dz(spectral::to_complex(lh), n, L1, L2);

    // All three terms against the volume form h dx dy, with both Hessian
    // norms carrying the metric weight (2/h)^2 and one factor of h absorbed.
    PeriodicField t_mixed(n, L1, L2), t_pure(n, L1, L2), t_ricci(n, L1, L2);
    for (std::size_t i = 0; i < t_mixed.v.size(); ++i) {
        const double hi = state.h.v[i];
        t_mixed.v[i] = 4.0 / hi * std::norm(fzzb[i]);
        const std::complex<double> covar = fzz[i] - a[i] * fz[i];
        t_pure.v[i] = 4.0 / hi * std::norm(covar);
        t_ricci.v[i] = state.scalar_curv.v[i] * std::norm(fz[i]);
    }
    double lhs = integrate_flat(t_mixed);
    double rhs = integrate_flat(t_pure) + integrate_flat(t_ricci);
    return std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs) + 1.0);
}

} // namespace calabilab
