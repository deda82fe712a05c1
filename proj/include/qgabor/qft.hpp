#pragma once

#include <array>

#include "qgabor/field.hpp"

namespace qgabor {

/// Discrete two-sided quaternionic Fourier transform,
///   F[u,v] = sum_{a,b} exp(-2 pi i x1(a) w1(u)) f[a,b] exp(-2 pi j x2(b) w2(v)) dx1 dx2
/// on the reciprocal grid (DC first, spacings 1/L1, 1/L2). The kernels use
/// the true sample coordinates, so the pair discretizes the continuous
/// transform rather than a unitary DFT.
QField qft_forward(const QField& f);

/// Inverse with kernels exp(+2 pi i x1 w1), exp(+2 pi j x2 w2) and weight
/// dw1 dw2. The reconstruction origin (x1_min, x2_min) selects the signal
/// grid; the two-argument overload uses the centered convention
/// x_min = -floor(n/2) * dx, which round-trips centered inputs exactly.
QField qft_inverse(const QField& F, double x1_min, double x2_min);
QField qft_inverse(const QField& F);

/// Right-right transform sum_{a,b} h[a,b] Ei(-2 pi x1 w1) Ej(-2 pi x2 w2)
/// (both kernels multiply from the right, i-kernel first). This is the
/// transform whose bins are the quaternionic Gabor inner products
/// (h windowed) against materialized modulations.
QField rr_forward(const QField& h);

/// Plain synthesis sum over the bins of `c` (no quadrature weight) with both
/// kernels multiplying from the right of the coefficient:
///   i_first: S = sum c Ei(+2 pi x1 w1) Ej(+2 pi x2 w2)
///   else:    S = sum c Ej(+2 pi x2 w2) Ei(+2 pi x1 w1)
/// The order matters: the j-first form is the left-module expansion dual to
/// rr_forward, the i-first form matches the real-coefficient synthesis
/// formula. `signal_grid` fixes the output coordinates and must be
/// reciprocal to c's grid.
QField rr_inverse_sum(const QField& c, const Grid2& signal_grid, bool i_kernel_first = true);

/// Zero-pads f into an enlarged periodic domain (same spacings, `factor`
/// times the sample counts), keeping the original block's coordinates.
QField zero_pad(const QField& f, std::int64_t factor);

/// One transform round trip keeping only bins with both wrapped frequencies
/// within `cutoff`; smooths raw noise probes so they decay at the boundary.
QField low_pass_roundtrip(const QField& f, double cutoff);

struct UncertaintyReport {
    std::array<double, 2> delta_x{};
    std::array<double, 2> delta_omega{};
    std::array<double, 2> products{};
    double bound{0.0};  // 1/(4 pi)
};

/// Spatial and spectral uncertainties about the origin, with second moments
/// of |f|^2 and of |qft_forward(f)|^2 (wrapped frequencies). Requires a
/// nonzero field whose boundary values have decayed below 1e-10 of the peak.
UncertaintyReport uncertainty(const QField& f);

}  // namespace qgabor
