#include "qgabor/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace qgabor::detail {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void fft_pow2(std::vector<std::complex<double>>& a, int sign) {
    const std::size_t n = a.size();
    // bit reversal permutation
    for (std::size_t i = 1, rev = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; rev & bit; bit >>= 1) rev ^= bit;
        rev ^= bit;
        if (i < rev) std::swap(a[i], a[rev]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * kTwoPi / static_cast<double>(len);
        const std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

// Bluestein: DFT of arbitrary length via a power-of-two convolution.
void fft_bluestein(std::vector<std::complex<double>>& a, int sign) {
    const std::size_t n = a.size();
    std::size_t m = 1;
    while (m < 2 * n + 1) m <<= 1;

    // chirp(k) = exp(sign * pi i k^2 / n); k^2 mod 2n keeps the angle small
    std::vector<std::complex<double>> chirp(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::uintmax_t k2 = (static_cast<std::uintmax_t>(k) * k) % (2 * n);
        const double ang = sign * (kTwoPi / 2.0) * static_cast<double>(k2) / static_cast<double>(n);
        chirp[k] = {std::cos(ang), std::sin(ang)};
    }

    std::vector<std::complex<double>> u(m), v(m);
    for (std::size_t k = 0; k < n; ++k) u[k] = a[k] * chirp[k];
    v[0] = std::conj(chirp[0]);
    for (std::size_t k = 1; k < n; ++k) v[k] = v[m - k] = std::conj(chirp[k]);

    fft_pow2(u, -1);
    fft_pow2(v, -1);
    for (std::size_t k = 0; k < m; ++k) u[k] *= v[k];
    fft_pow2(u, +1);
    const double inv_m = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k < n; ++k) a[k] = u[k] * inv_m * chirp[k];
}

}  // namespace

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void fft(std::vector<std::complex<double>>& a, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("fft: sign must be +-1");
    if (a.size() <= 1) return;
    if (is_pow2(a.size()))
        fft_pow2(a, sign);
    else
        fft_bluestein(a, sign);
}

}  // namespace qgabor::detail
