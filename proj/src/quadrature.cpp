#include "calabilab/quadrature.hpp"

#include "calabilab/errors.hpp"

#include <cmath>
#include <numbers>

namespace calabilab {

namespace gauss {

void legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    if (n < 1) throw ConfigError("gauss rule needs at least 1 node");
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Newton from the Chebyshev-based initial guess
        double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double p0 = 0.0, p1 = 0.0;
        for (int it = 0; it < 100; ++it) {
            p0 = 1.0;
            p1 = 0.0;
            for (int m = 0; m < n; ++m) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * m + 1.0) * t * p1 - m * p2) / (m + 1.0);
            }
            const double dp = n * (t * p0 - p1) / (t * t - 1.0);
            const double dt = p0 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) {
                p0 = 1.0;
                p1 = 0.0;
                for (int m = 0; m < n; ++m) {
                    const double p2 = p1;
                    p1 = p0;
                    p0 = ((2.0 * m + 1.0) * t * p1 - m * p2) / (m + 1.0);
                }
                break;
            }
        }
        const double dp = n * (t * p0 - p1) / (t * t - 1.0);
        x[i] = -t;
        x[n - 1 - i] = t;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
}

void legendre_on(double a, double b, int n, std::vector<double>& x, std::vector<double>& w) {
    legendre(n, x, w);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        x[i] = mid + half * x[i];
        w[i] *= half;
    }
}

} // namespace gauss

QuadratureRule make_volume_rule(const Polytope& P, int order) {
    if (order < 1) throw ConfigError("quadrature order must be positive");
    QuadratureRule rule;
    rule.dim = P.dim();
    rule.order = order;
    rule.polytope_fingerprint = P.fingerprint();

    if (P.dim() == 1) {
        const int n = order / 2 + 1; // exact through degree 2n-1 >= order
        std::vector<double> x, w;
        gauss::legendre_on(P.lower(), P.upper(), n, x, w);
        for (int i = 0; i < n; ++i) {
            rule.nodes.push_back({x[i], 0.0});
            rule.weights.push_back(w[i]);
        }
        return rule;
    }

    // Centroid fan; per-triangle Duffy map of a tensor Gauss rule.
    // x(s,t) = (1-s) c + s((1-t) v + t w), jacobian = 2|T| s; integrands of
    // degree p become degree p+1 in s, so n = (order+3)/2 nodes per axis.
    const int n = (order + 3) / 2 + 1;
    std::vector<double> gs, gw;
    gauss::legendre_on(0.0, 1.0, n, gs, gw);
    const auto c = P.barycenter();
    const auto& verts = P.vertices();
    const std::size_t m = verts.size();
    for (std::size_t k = 0; k < m; ++k) {
        const auto& v = verts[k];
        const auto& w2 = verts[(k + 1) % m];
        const double twice_area = (v[0] - c[0]) * (w2[1] - c[1]) - (w2[0] - c[0]) * (v[1] - c[1]);
        for (int i = 0; i < n; ++i) {
            const double s = gs[i];
            for (int j = 0; j < n; ++j) {
                const double t = gs[j];
                const double px = (1.0 - s) * c[0] + s * ((1.0 - t) * v[0] + t * w2[0]);
                const double py = (1.0 - s) * c[1] + s * ((1.0 - t) * v[1] + t * w2[1]);
                rule.nodes.push_back({px, py});
                rule.weights.push_back(gw[i] * gw[j] * twice_area * s);
            }
        }
    }
    return rule;
}

double integrate_polytope(const std::function<double(const double*)>& f,
                          const Polytope& P, const QuadratureRule& rule) {
    if (rule.polytope_fingerprint != P.fingerprint())
        throw ConfigError("integrate_polytope: quadrature rule was built for a different polytope");
    double s = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i)
        s += rule.weights[i] * f(rule.nodes[i].data());
    return s;
}

double integrate_boundary(const std::function<double(const double*)>& f,
                          const Polytope& P, int order) {
    double s = 0.0;
    if (P.dim() == 1) {
        for (const auto& facet : P.facets())
            s += facet.sigma_length * f(facet.v0.data());
        return s;
    }
    const int n = order / 2 + 1;
    std::vector<double> gx, gw;
    gauss::legendre_on(0.0, 1.0, n, gx, gw);
    for (const auto& facet : P.facets()) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
            const double t = gx[i];
            const double p[2] = {(1.0 - t) * facet.v0[0] + t * facet.v1[0],
                                 (1.0 - t) * facet.v0[1] + t * facet.v1[1]};
            acc += gw[i] * f(p);
        }
        s += acc * facet.sigma_length;
    }
    return s;
}

} // namespace calabilab
