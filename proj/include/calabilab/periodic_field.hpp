#pragma once

#include <complex>
#include <utility>
#include <vector>

namespace calabilab {

/// Real scalar field on a uniform N x N grid over [0,L1) x [0,L2).
/// Storage is row-major: value(i,j) = f(i*L1/N, j*L2/N). N must be a power
/// of two; derivatives and integrals are Fourier-spectral.
struct PeriodicField {
    int n = 0;
    double L1 = 0.0, L2 = 0.0;
    std::vector<double> v;

    PeriodicField() = default;
    PeriodicField(int n_, double L1_, double L2_);

    double& at(int i, int j) { return v[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const { return v[static_cast<std::size_t>(i) * n + j]; }

    bool same_grid(const PeriodicField& o) const {
        return n == o.n && L1 == o.L1 && L2 == o.L2;
    }

    double max_abs() const;
    double min_value() const;
    bool all_finite() const;
};

PeriodicField operator+(const PeriodicField& a, const PeriodicField& b);
PeriodicField operator-(const PeriodicField& a, const PeriodicField& b);
PeriodicField operator*(double s, const PeriodicField& a);
PeriodicField& operator+=(PeriodicField& a, const PeriodicField& b);

/// Mixed spectral derivative d^(a+b) f / dx^a dy^b, |(a,b)| <= 4.
/// Exact for band-limited fields; Nyquist modes are zeroed for odd orders.
PeriodicField spectral_derivative(const PeriodicField& f, std::pair<int, int> multi_index);

/// Trapezoidal rule (= spectral on the periodic grid): integral f * density dx dy.
/// density must be pointwise positive.
double integrate_torus(const PeriodicField& f, const PeriodicField& density);

/// integral f dx dy against the flat background.
double integrate_flat(const PeriodicField& f);

/// Flat L2 norm sqrt(integral f^2 dx dy).
double l2_norm_flat(const PeriodicField& f);

/// sqrt(integral |grad^k f|^2 dx dy): Fourier sum of |k|^(2k) |f_hat|^2.
double sobolev_seminorm_flat(const PeriodicField& f, int k);

PeriodicField pointwise_multiply(const PeriodicField& a, const PeriodicField& b);

/// Random real field supported on modes 0 < max(|k1|,|k2|) <= band,
/// rescaled so that max|f| = eps. Deterministic in the seed.
PeriodicField random_bandlimited(int n, double L1, double L2, int band, double eps,
                                 std::uint64_t seed);

/// f(x,y) = eps * cos(2*pi*(k1 x/L1 + k2 y/L2)).
PeriodicField single_mode(int n, double L1, double L2, int k1, int k2, double eps);

namespace spectral {

using Cvec = std::vector<std::complex<double>>;

/// Unnormalized forward / normalized inverse 2-D DFT (plans cached per grid size).
void dft2(const Cvec& in, Cvec& out, int n, bool inverse);

/// Angular wavenumber along an axis: 2*pi*k_idx/L with k_idx in [-n/2, n/2).
double wavenumber(int index, int n, double L);

Cvec to_complex(const PeriodicField& f);
PeriodicField real_part(const Cvec& c, int n, double L1, double L2);

/// d_z = (d_x - i d_y)/2 and d_zbar = (d_x + i d_y)/2 on complex fields;
/// Nyquist lines are always zeroed.
Cvec dz(const Cvec& f, int n, double L1, double L2);
Cvec dzbar(const Cvec& f, int n, double L1, double L2);

/// Apply a real Fourier multiplier m(k) to a real field.
PeriodicField apply_multiplier(const PeriodicField& f, const std::vector<double>& symbol);

/// Tabulate m(|k|^2) over the grid in DFT layout.
std::vector<double> laplacian_symbol(int n, double L1, double L2);   // -|k|^2
std::vector<double> bilaplacian_quarter_symbol(int n, double L1, double L2); // |k|^4/4

/// Band-limited resample onto a finer grid (zero padding in Fourier space).
PeriodicField upsample(const PeriodicField& f, int n_fine);

} // namespace spectral

} // namespace calabilab
