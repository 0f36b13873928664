#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace calabilab {

/// Compact convex momentum polytope, d = 1 (interval) or d = 2 (polygon).
/// Facets are affine functions l_k(x) = <nu_k, x> + c_k with primitive integer
/// inward normals; l_k > 0 on the interior. Construction checks Delzant-type
/// conditions: simple vertices and unimodular adjacent normal pairs.
class Polytope {
public:
    struct Facet {
        std::array<long long, 2> normal{0, 0}; // primitive integer inward normal
        double offset = 0.0;                   // c_k
        std::array<double, 2> v0{0, 0}, v1{0, 0}; // facet endpoints (equal for d=1)
        double sigma_length = 0.0;             // facet mass for the boundary measure
    };

    static Polytope interval(double a, double b);
    /// Vertices of a convex polygon in order (either orientation).
    static Polytope polygon(const std::vector<std::array<double, 2>>& vertices);
    /// Plain-text description: one vertex per line, space-separated reals,
    /// blank lines and '#' comments allowed. Throws ConfigError listing every
    /// malformed line.
    static Polytope from_file(const std::string& path);
    static Polytope from_text(const std::string& text, const std::string& origin = "<text>");

    int dim() const { return dim_; }
    const std::vector<std::array<double, 2>>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }

    double volume() const { return volume_; }
    std::array<double, 2> barycenter() const { return barycenter_; }

    double facet_value(const Facet& f, const double* x) const {
        double s = f.offset;
        for (int i = 0; i < dim_; ++i) s += static_cast<double>(f.normal[i]) * x[i];
        return s;
    }
    /// min_k l_k(x); nonnegative iff x lies in the closed polytope
    /// (up to the normals' scale).
    double inradius_gauge(const double* x) const;
    bool contains(const double* x, double tol = 1e-12) const;

    /// Euclidean distance to the boundary, for boundary-adjacency tests.
    double boundary_distance(const double* x) const;

    std::uint64_t fingerprint() const { return fingerprint_; }

    /// Interval bounds (d = 1 only).
    double lower() const { return vertices_[0][0]; }
    double upper() const { return vertices_[1][0]; }

private:
    Polytope() = default;
    void finalize();

    int dim_ = 0;
    std::vector<std::array<double, 2>> vertices_;
    std::vector<Facet> facets_;
    double volume_ = 0.0;
    std::array<double, 2> barycenter_{0.0, 0.0};
    std::uint64_t fingerprint_ = 0;
};

} // namespace calabilab
