#include "calabilab/polytope.hpp"

#include "calabilab/errors.hpp"
#include "calabilab/util.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace calabilab {

namespace {

// Smallest integer vector parallel to d within tolerance, via continued
// fractions of the slope. Polytope edges must be rational for primitive
// integer normals to exist.
bool rationalize_direction(double dx, double dy, long long& px, long long& py,
                           double tol = 1e-9, long long max_den = 4096) {
    const double norm = std::hypot(dx, dy);
    if (norm == 0.0) return false;
    dx /= norm;
    dy /= norm;
    if (std::abs(dy) <= tol) {
        px = dx > 0 ? 1 : -1;
        py = 0;
        return true;
    }
    if (std::abs(dx) <= tol) {
        px = 0;
        py = dy > 0 ? 1 : -1;
        return true;
    }
    // approximate slope dy/dx by p/q
    double target = dy / dx;
    long long p_prev = 1, q_prev = 0;
    long long p_cur = static_cast<long long>(std::floor(target)), q_cur = 1;
    double frac = target - std::floor(target);
    for (int it = 0; it < 40; ++it) {
        const double approx = static_cast<double>(p_cur) / static_cast<double>(q_cur);
        if (std::abs(approx - target) <= tol * std::max(1.0, std::abs(target))) break;
        if (frac == 0.0 || q_cur > max_den) break;
        const double inv = 1.0 / frac;
        const long long a = static_cast<long long>(std::floor(inv));
        frac = inv - std::floor(inv);
        const long long p_next = a * p_cur + p_prev, q_next = a * q_cur + q_prev;
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
    }
    if (q_cur > max_den) return false;
    long long a = q_cur, b = p_cur; // direction (q, p) ~ (dx, dy)
    if (dx < 0) {
        a = -a;
        b = -b;
    }
    const long long g = std::gcd(std::llabs(a), std::llabs(b));
    if (g == 0) return false;
    a /= g;
    b /= g;
    // verify parallelism
    const double cross = dx * static_cast<double>(b) - dy * static_cast<double>(a);
    if (std::abs(cross) > tol * std::hypot(static_cast<double>(a), static_cast<double>(b)))
        return false;
    px = a;
    py = b;
    return true;
}

} // namespace

Polytope Polytope::interval(double a, double b) {
    if (!(a < b)) throw ConfigError("interval polytope requires a < b");
    Polytope p;
    p.dim_ = 1;
    p.vertices_ = {{a, 0.0}, {b, 0.0}};
    Facet left;
    left.normal = {1, 0};
    left.offset = -a;
    left.v0 = left.v1 = {a, 0.0};
    left.sigma_length = 1.0; // unit point mass
    Facet right;
    right.normal = {-1, 0};
    right.offset = b;
    right.v0 = right.v1 = {b, 0.0};
    right.sigma_length = 1.0;
    p.facets_ = {left, right};
    p.finalize();
    return p;
}

Polytope Polytope::polygon(const std::vector<std::array<double, 2>>& vertices_in) {
    if (vertices_in.size() < 3) throw ConfigError("polygon needs at least 3 vertices");
    std::vector<std::array<double, 2>> verts = vertices_in;
    // orient counter-clockwise
    double twice_area = 0.0;
    for (std::size_t k = 0; k < verts.size(); ++k) {
        const auto& v = verts[k];
        const auto& w = verts[(k + 1) % verts.size()];
        twice_area += v[0] * w[1] - w[0] * v[1];
    }
    if (twice_area == 0.0) throw ConfigError("polygon is degenerate (zero area)");
    if (twice_area < 0.0) std::reverse(verts.begin(), verts.end());

    Polytope p;
    p.dim_ = 2;
    p.vertices_ = verts;
    const std::size_t m = verts.size();
    for (std::size_t k = 0; k < m; ++k) {
        const auto& v = verts[k];
        const auto& w = verts[(k + 1) % m];
        const double dx = w[0] - v[0], dy = w[1] - v[1];
        long long ex = 0, ey = 0;
        if (!rationalize_direction(dx, dy, ex, ey))
            throw ConfigError("polygon edge " + std::to_string(k) +
                              " is not parallel to a small integer vector; primitive "
                              "normals do not exist");
        Facet f;
        f.normal = {-ey, ex}; // inward for CCW orientation
        f.offset = -(static_cast<double>(f.normal[0]) * v[0] +
                     static_cast<double>(f.normal[1]) * v[1]);
        f.v0 = v;
        f.v1 = w;
        const double nu_len = std::hypot(static_cast<double>(f.normal[0]),
                                         static_cast<double>(f.normal[1]));
        f.sigma_length = std::hypot(dx, dy) / nu_len;
        p.facets_.push_back(f);
    }

    // simplicity: no vertex may lie on a non-adjacent facet
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
            if (k == j || (k + 1) % m == j) continue; // adjacent facets of vertex j
            const double val = p.facet_value(p.facets_[k], verts[j].data());
            if (val <= 1e-10)
                throw ConfigError("polytope is not simple: vertex " + std::to_string(j) +
                                  " lies on facet " + std::to_string(k));
        }
    }
    // Delzant: adjacent normals form a Z^2 basis
    for (std::size_t j = 0; j < m; ++j) {
        const auto& fa = p.facets_[(j + m - 1) % m];
        const auto& fb = p.facets_[j];
        const long long det =
            fa.normal[0] * fb.normal[1] - fa.normal[1] * fb.normal[0];
        if (det != 1 && det != -1)
            throw ConfigError("polytope fails the Delzant condition at vertex " +
                              std::to_string(j) + ": |det| = " + std::to_string(std::llabs(det)));
    }
    p.finalize();
    return p;
}

Polytope Polytope::from_text(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<std::array<double, 2>> verts;
    std::vector<std::string> errors;
    int dim = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::vector<double> nums;
        std::string tok;
        bool bad = false;
        while (ls >> tok) {
            try {
                std::size_t used = 0;
                const double x = std::stod(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                nums.push_back(x);
            } catch (const std::exception&) {
                errors.push_back(origin + ":" + std::to_string(lineno) +
                                 ": not a number: '" + tok + "'");
                bad = true;
            }
        }
        if (bad || nums.empty()) continue;
        if (nums.size() > 2) {
            errors.push_back(origin + ":" + std::to_string(lineno) +
                             ": expected 1 or 2 coordinates, got " + std::to_string(nums.size()));
            continue;
        }
        if (dim == 0) dim = static_cast<int>(nums.size());
        if (static_cast<int>(nums.size()) != dim) {
            errors.push_back(origin + ":" + std::to_string(lineno) +
                             ": inconsistent dimension (expected " + std::to_string(dim) + ")");
            continue;
        }
        verts.push_back({nums[0], nums.size() > 1 ? nums[1] : 0.0});
    }
    if (!errors.empty()) {
        std::string msg = "malformed polytope description:";
        for (const auto& e : errors) msg += "\n  " + e;
        throw ConfigError(msg);
    }
    if (dim == 1) {
        if (verts.size() != 2)
            throw ConfigError(origin + ": interval needs exactly 2 vertices, got " +
                              std::to_string(verts.size()));
        const double a = std::min(verts[0][0], verts[1][0]);
        const double b = std::max(verts[0][0], verts[1][0]);
        return interval(a, b);
    }
    if (verts.empty()) throw ConfigError(origin + ": no vertices found");
    return polygon(verts);
}

Polytope Polytope::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open polytope file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str(), path);
}

void Polytope::finalize() {
    if (dim_ == 1) {
        volume_ = vertices_[1][0] - vertices_[0][0];
        barycenter_ = {0.5 * (vertices_[0][0] + vertices_[1][0]), 0.0};
    } else {
        double a2 = 0.0, cx = 0.0, cy = 0.0;
        const std::size_t m = vertices_.size();
        for (std::size_t k = 0; k < m; ++k) {
            const auto& v = vertices_[k];
            const auto& w = vertices_[(k + 1) % m];
            const double cr = v[0] * w[1] - w[0] * v[1];
            a2 += cr;
            cx += (v[0] + w[0]) * cr;
            cy += (v[1] + w[1]) * cr;
        }
        volume_ = 0.5 * a2;
        barycenter_ = {cx / (3.0 * a2), cy / (3.0 * a2)};
    }
    if (!(volume_ > 0.0)) throw ConfigError("polytope volume must be positive");

    std::uint64_t h = fnv1a(&dim_, sizeof(dim_));
    for (const auto& v : vertices_) h = fnv1a(v.data(), 2 * sizeof(double), h);
    fingerprint_ = h;
}

double Polytope::inradius_gauge(const double* x) const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& f : facets_) m = std::min(m, facet_value(f, x));
    return m;
}

bool Polytope::contains(const double* x, double tol) const {
    return inradius_gauge(x) >= -tol;
}

double Polytope::boundary_distance(const double* x) const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& f : facets_) {
        const double nu_len = std::hypot(static_cast<double>(f.normal[0]),
                                         static_cast<double>(f.normal[1]));
        m = std::min(m, facet_value(f, x) / nu_len);
    }
    return m;
}

} // namespace calabilab
