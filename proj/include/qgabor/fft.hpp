#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace qgabor::detail {

/// Unscaled complex DFT, a[k] <- sum_m a[m] exp(sign * 2 pi i k m / n).
/// sign = -1 is the forward convention. Radix-2 in place for powers of two,
/// Bluestein otherwise, so any length is O(n log n).
void fft(std::vector<std::complex<double>>& a, int sign);

bool is_pow2(std::size_t n);

}  // namespace qgabor::detail
