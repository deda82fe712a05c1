#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "qgabor/field.hpp"
#include "qgabor/qft.hpp"
#include "qgabor/quaternion.hpp"

namespace qgabor::testutil {

/// Deterministic RNG for tests: mt19937_64 bits mapped to doubles by hand so
/// results do not depend on the standard library's distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform() {  // [0, 1)
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 1e-300) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    Quaternion quaternion(double scale = 1.0) {
        return {scale * normal(), scale * normal(), scale * normal(), scale * normal()};
    }

private:
    std::mt19937_64 eng_;
    bool have_spare_{false};
    double spare_{0.0};
};

inline QField random_field(const Grid2& grid, Rng& rng) {
    QField f(grid);
    for (auto& q : f.data()) q = rng.quaternion();
    return f;
}

inline QField random_real_field(const Grid2& grid, Rng& rng) {
    QField f(grid);
    for (auto& q : f.data()) q = Quaternion::real(rng.normal());
    return f;
}

/// Low-pass by one transform round trip: keeps bins with both wrapped
/// frequencies within `cutoff`, removing boundary artifacts from raw noise.
inline QField low_pass(const QField& f, double cutoff) {
    QField F = qft_forward(f);
    const Grid2& rg = F.grid();
    for (std::int64_t u = 0; u < rg.n1; ++u)
        for (std::int64_t v = 0; v < rg.n2; ++v) {
            const double w1 = wrapped_freq(u, rg.n1, rg.dx1);
            const double w2 = wrapped_freq(v, rg.n2, rg.dx2);
            if (std::abs(w1) > cutoff || std::abs(w2) > cutoff) F.at(u, v) = Quaternion::zero();
        }
    return qft_inverse(F, f.grid().x1_min, f.grid().x2_min);
}

inline QField smooth_random_field(const Grid2& grid, Rng& rng, double cutoff) {
    return low_pass(random_field(grid, rng), cutoff);
}

inline QField smooth_random_real_field(const Grid2& grid, Rng& rng, double cutoff) {
    QField f = low_pass(random_real_field(grid, rng), cutoff);
    for (auto& q : f.data()) q = Quaternion::real(q.w);  // drop round-trip dust
    return f;
}

// ---------------------------------------------------------------------------
// Independent quadrature oracles (test-side only).
// ---------------------------------------------------------------------------

/// 1-D quadrature of int exp(-pi t^2) exp(-2 pi i t w) dt on [-8, 8].
inline std::complex<double> gauss_spectrum_1d(double w, int n = 16384) {
    const double lo = -8.0, hi = 8.0;
    const double h = (hi - lo) / n;
    std::complex<double> acc{0.0, 0.0};
    for (int k = 0; k < n; ++k) {
        const double t = lo + (k + 0.5) * h;
        const double ang = -6.283185307179586476925286766559 * t * w;
        acc += std::exp(-3.1415926535897932384626433832795 * t * t) *
               std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc * h;
}

/// 1-D complex Zak sum of the Gaussian, Z(t, v) = sum_m e^{-pi (t-m)^2} e^{2 pi i m v}.
inline std::complex<double> gauss_zak_1d(double t, double v, int trunc = 12) {
    std::complex<double> acc{0.0, 0.0};
    for (int m = -trunc; m <= trunc; ++m) {
        const double ang = 6.283185307179586476925286766559 * m * v;
        acc += std::exp(-3.1415926535897932384626433832795 * (t - m) * (t - m)) *
               std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

/// Grid search of sup |gauss_zak_1d|^4 over the unit torus (the optimal
/// upper frame bound of the Gaussian system at alpha = 1).
inline double gauss_upper_bound_theta_oracle(int grid = 256) {
    double sup2 = 0.0;
    for (int a = 0; a < grid; ++a)
        for (int b = 0; b < grid; ++b) {
            const double t = static_cast<double>(a) / grid;
            const double v = static_cast<double>(b) / grid;
            sup2 = std::max(sup2, std::norm(gauss_zak_1d(t, v)));
        }
    return sup2 * sup2;
}

/// Direct-sum Wiener-Amalgam oracle for the Gaussian at alpha = 1:
/// per axis sum of tile sups is 2 sum_{m>=0} e^{-pi m^2}.
inline double gauss_wiener_oracle() {
    double s = 0.0;
    for (int m = 0; m <= 12; ++m) s += std::exp(-3.1415926535897932384626433832795 * m * m);
    return (2.0 * s) * (2.0 * s);
}

}  // namespace qgabor::testutil
