#pragma once

#include "calabilab/polytope.hpp"

#include <array>
#include <functional>
#include <vector>

namespace calabilab {

/// Nodes and weights for integral_P f dmu (Lebesgue on the polytope).
/// Interval: Gauss-Legendre. Polygon: centroid fan of triangles with a
/// tensor Gauss rule per triangle (Duffy map). Weights are positive and the
/// rule is exact for polynomials up to `order`.
struct QuadratureRule {
    int dim = 0;
    int order = 0;
    std::uint64_t polytope_fingerprint = 0;
    std::vector<std::array<double, 2>> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }
};

QuadratureRule make_volume_rule(const Polytope& P, int order);

double integrate_polytope(const std::function<double(const double*)>& f,
                          const Polytope& P, const QuadratureRule& rule);

/// integral_{dP} f dsigma with the primitive-normal facet measure:
/// on the facet {<x,nu>+c=0}, dsigma = (Euclidean measure)/|nu|.
/// `order` controls the per-facet Gauss rule.
double integrate_boundary(const std::function<double(const double*)>& f,
                          const Polytope& P, int order = 16);

namespace gauss {
/// Gauss-Legendre nodes/weights on [-1,1].
void legendre(int n, std::vector<double>& x, std::vector<double>& w);
/// Mapped to [a,b].
void legendre_on(double a, double b, int n, std::vector<double>& x, std::vector<double>& w);
} // namespace gauss

} // namespace calabilab
