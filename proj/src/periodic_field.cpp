#include "calabilab/periodic_field.hpp"

#include "calabilab/errors.hpp"
#include "calabilab/util.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace calabilab {

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void require_grid(const PeriodicField& f) {
    if (!power_of_two(f.n))
        throw ConfigError("grid size must be a power of two, got " + std::to_string(f.n));
    if (!(f.L1 > 0.0) || !(f.L2 > 0.0))
        throw ConfigError("torus periods must be positive");
    if (f.v.size() != static_cast<std::size_t>(f.n) * f.n)
        throw ConfigError("field storage does not match grid size");
}

} // namespace

PeriodicField::PeriodicField(int n_, double L1_, double L2_)
    : n(n_), L1(L1_), L2(L2_), v(static_cast<std::size_t>(n_) * n_, 0.0) {
    require_grid(*this);
}

double PeriodicField::max_abs() const {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double PeriodicField::min_value() const {
    double m = v.empty() ? 0.0 : v[0];
    for (double x : v) m = std::min(m, x);
    return m;
}

bool PeriodicField::all_finite() const {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

PeriodicField operator+(const PeriodicField& a, const PeriodicField& b) {
    PeriodicField r = a;
    for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] += b.v[i];
    return r;
}

PeriodicField operator-(const PeriodicField& a, const PeriodicField& b) {
    PeriodicField r = a;
    for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] -= b.v[i];
    return r;
}

PeriodicField operator*(double s, const PeriodicField& a) {
    PeriodicField r = a;
    for (double& x : r.v) x *= s;
    return r;
}

PeriodicField& operator+=(PeriodicField& a, const PeriodicField& b) {
    for (std::size_t i = 0; i < a.v.size(); ++i) a.v[i] += b.v[i];
    return a;
}

namespace spectral {

namespace {

// FFTW plans are cached per grid size; creation is serialized, execution on
// caller-owned arrays is thread-safe.
struct PlanCache {
    std::mutex mu;
    std::map<std::pair<int, int>, fftw_plan> plans; // (n, sign) -> plan
    std::map<int, fftw_complex*> scratch;

    fftw_plan get(int n, int sign) {
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_pair(n, sign);
        auto it = plans.find(key);
        if (it != plans.end()) return it->second;
        fftw_complex*& buf = scratch[n];
        if (!buf) buf = fftw_alloc_complex(static_cast<std::size_t>(n) * n);
        fftw_plan p = fftw_plan_dft_2d(n, n, buf, buf, sign,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans[key] = p;
        return p;
    }
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

} // namespace

void dft2(const Cvec& in, Cvec& out, int n, bool inverse) {
    const std::size_t sz = static_cast<std::size_t>(n) * n;
    if (in.size() != sz) throw ConfigError("dft2: size mismatch");
    out.resize(sz);
    fftw_plan p = cache().get(n, inverse ? FFTW_BACKWARD : FFTW_FORWARD);
    // const_cast is safe: FFTW does not modify the input array for
    // out-of-place c2c transforms.
    fftw_execute_dft(p,
                     reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in.data())),
                     reinterpret_cast<fftw_complex*>(out.data()));
    if (inverse) {
        const double s = 1.0 / static_cast<double>(sz);
        for (auto& z : out) z *= s;
    }
}

double wavenumber(int index, int n, double L) {
    int k = index <= n / 2 ? index : index - n;
    if (index == n / 2) k = n / 2; // even-order symbols only; odd orders zero it
    return 2.0 * std::numbers::pi * static_cast<double>(k) / L;
}

Cvec to_complex(const PeriodicField& f) {
    Cvec c(f.v.size());
    for (std::size_t i = 0; i < f.v.size(); ++i) c[i] = f.v[i];
    return c;
}

PeriodicField real_part(const Cvec& c, int n, double L1, double L2) {
    PeriodicField f(n, L1, L2);
    for (std::size_t i = 0; i < f.v.size(); ++i) f.v[i] = c[i].real();
    return f;
}

namespace {

Cvec complex_first_derivative(const Cvec& f, int n, double L1, double L2, bool zbar) {
    Cvec fh, out;
    dft2(f, fh, n, false);
    for (int i = 0; i < n; ++i) {
        const double kx = wavenumber(i, n, L1);
        for (int j = 0; j < n; ++j) {
            const double ky = wavenumber(j, n, L2);
            std::complex<double> sym(0.0, 0.5 * kx);
            sym += zbar ? std::complex<double>(-0.5 * ky, 0.0)
                        : std::complex<double>(0.5 * ky, 0.0);
            if (i == n / 2 || j == n / 2) sym = 0.0; // first order: drop Nyquist
            fh[static_cast<std::size_t>(i) * n + j] *= sym;
        }
    }
    dft2(fh, out, n, true);
    return out;
}

} // namespace

Cvec dz(const Cvec& f, int n, double L1, double L2) {
    return complex_first_derivative(f, n, L1, L2, /*zbar=*/false);
}

Cvec dzbar(const Cvec& f, int n, double L1, double L2) {
    return complex_first_derivative(f, n, L1, L2, /*zbar=*/true);
}

PeriodicField apply_multiplier(const PeriodicField& f, const std::vector<double>& symbol) {
    require_grid(f);
    Cvec c = to_complex(f), ch;
    dft2(c, ch, f.n, false);
    for (std::size_t i = 0; i < ch.size(); ++i) ch[i] *= symbol[i];
    Cvec out;
    dft2(ch, out, f.n, true);
    return real_part(out, f.n, f.L1, f.L2);
}

std::vector<double> laplacian_symbol(int n, double L1, double L2) {
    std::vector<double> s(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        const double kx = wavenumber(i, n, L1);
        for (int j = 0; j < n; ++j) {
            const double ky = wavenumber(j, n, L2);
            s[static_cast<std::size_t>(i) * n + j] = -(kx * kx + ky * ky);
        }
    }
    return s;
}

std::vector<double> bilaplacian_quarter_symbol(int n, double L1, double L2) {
    std::vector<double> s = laplacian_symbol(n, L1, L2);
    for (double& x : s) x = 0.25 * x * x;
    return s;
}

PeriodicField upsample(const PeriodicField& f, int n_fine) {
    require_grid(f);
    if (n_fine < f.n || !power_of_two(n_fine))
        throw ConfigError("upsample: target grid must be a power of two >= source");
    if (n_fine == f.n) return f;
    Cvec c = to_complex(f), ch;
    dft2(c, ch, f.n, false);
    const int n = f.n;
    Cvec fine(static_cast<std::size_t>(n_fine) * n_fine, 0.0);
    const double scale = static_cast<double>(n_fine) * n_fine / (static_cast<double>(n) * n);
    for (int i = 0; i < n; ++i) {
        int ii = i <= n / 2 ? i : i - n + n_fine;
        for (int j = 0; j < n; ++j) {
            int jj = j <= n / 2 ? j : j - n + n_fine;
            fine[static_cast<std::size_t>(ii) * n_fine + jj] =
                ch[static_cast<std::size_t>(i) * n + j] * scale;
        }
    }
    Cvec out;
    dft2(fine, out, n_fine, true);
    return real_part(out, n_fine, f.L1, f.L2);
}

} // namespace spectral

PeriodicField spectral_derivative(const PeriodicField& f, std::pair<int, int> multi_index) {
    require_grid(f);
    const int a = multi_index.first, b = multi_index.second;
    if (a < 0 || b < 0 || a + b > 4)
        throw ConfigError("spectral_derivative: multi-index must be nonnegative with |index| <= 4");
    const int n = f.n;
    spectral::Cvec c = spectral::to_complex(f), ch;
    spectral::dft2(c, ch, n, false);
    for (int i = 0; i < n; ++i) {
        const double kx = spectral::wavenumber(i, n, f.L1);
        for (int j = 0; j < n; ++j) {
            const double ky = spectral::wavenumber(j, n, f.L2);
            std::complex<double> sym(1.0, 0.0);
            for (int q = 0; q < a; ++q) sym *= std::complex<double>(0.0, kx);
            for (int q = 0; q < b; ++q) sym *= std::complex<double>(0.0, ky);
            if ((a % 2 == 1 && i == n / 2) || (b % 2 == 1 && j == n / 2)) sym = 0.0;
            ch[static_cast<std::size_t>(i) * n + j] *= sym;
        }
    }
    spectral::Cvec out;
    spectral::dft2(ch, out, n, true);
    return spectral::real_part(out, n, f.L1, f.L2);
}

double integrate_torus(const PeriodicField& f, const PeriodicField& density) {
    require_grid(f);
    if (!f.same_grid(density)) throw ConfigError("integrate_torus: grid mismatch");
    if (density.min_value() <= 0.0)
        throw DomainError("integrate_torus: density must be positive, min = " +
                          std::to_string(density.min_value()));
    double s = 0.0;
    for (std::size_t i = 0; i < f.v.size(); ++i) s += f.v[i] * density.v[i];
    return s * (f.L1 * f.L2 / (static_cast<double>(f.n) * f.n));
}

double integrate_flat(const PeriodicField& f) {
    require_grid(f);
    double s = 0.0;
    for (double x : f.v) s += x;
    return s * (f.L1 * f.L2 / (static_cast<double>(f.n) * f.n));
}

double l2_norm_flat(const PeriodicField& f) {
    double s = 0.0;
    for (double x : f.v) s += x * x;
    return std::sqrt(s * (f.L1 * f.L2 / (static_cast<double>(f.n) * f.n)));
}

double sobolev_seminorm_flat(const PeriodicField& f, int k) {
    require_grid(f);
    if (k == 0) return l2_norm_flat(f);
    spectral::Cvec c = spectral::to_complex(f), ch;
    spectral::dft2(c, ch, f.n, false);
    const int n = f.n;
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        const double kx = spectral::wavenumber(i, n, f.L1);
        for (int j = 0; j < n; ++j) {
            const double ky = spectral::wavenumber(j, n, f.L2);
            const double k2 = kx * kx + ky * ky;
            double w = 1.0;
            for (int q = 0; q < k; ++q) w *= k2;
            s += w * std::norm(ch[static_cast<std::size_t>(i) * n + j]);
        }
    }
    // Parseval with the unnormalized forward transform.
    s *= f.L1 * f.L2 / (static_cast<double>(n) * n * n * n);
    return std::sqrt(s);
}

PeriodicField pointwise_multiply(const PeriodicField& a, const PeriodicField& b) {
    PeriodicField r = a;
    for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] *= b.v[i];
    return r;
}

PeriodicField random_bandlimited(int n, double L1, double L2, int band, double eps,
                                 std::uint64_t seed) {
    if (band < 1 || band >= n / 2)
        throw ConfigError("random_bandlimited: band must be in [1, n/2)");
    Rng rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    spectral::Cvec ch(static_cast<std::size_t>(n) * n, 0.0);
    // Fill one half-space; Hermitian symmetry makes the field real.
    for (int a = -band; a <= band; ++a) {
        for (int b = -band; b <= band; ++b) {
            if (a == 0 && b == 0) continue;
            if (a < 0 || (a == 0 && b < 0)) continue;
            std::complex<double> c(gauss(rng), gauss(rng));
            const int i = (a % n + n) % n, j = (b % n + n) % n;
            const int im = ((-a) % n + n) % n, jm = ((-b) % n + n) % n;
            ch[static_cast<std::size_t>(i) * n + j] = c;
            ch[static_cast<std::size_t>(im) * n + jm] = std::conj(c);
        }
    }
    spectral::Cvec out;
    spectral::dft2(ch, out, n, true);
    PeriodicField f = spectral::real_part(out, n, L1, L2);
    const double m = f.max_abs();
    if (m > 0.0)
        for (double& x : f.v) x *= eps / m;
    return f;
}

PeriodicField single_mode(int n, double L1, double L2, int k1, int k2, double eps) {
    PeriodicField f(n, L1, L2);
    const double two_pi = 2.0 * std::numbers::pi;
    for (int i = 0; i < n; ++i) {
        const double x = L1 * i / n;
        for (int j = 0; j < n; ++j) {
            const double y = L2 * j / n;
            f.at(i, j) = eps * std::cos(two_pi * (k1 * x / L1 + k2 * y / L2));
        }
    }
    return f;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

} // namespace calabilab
