#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "qgabor/field.hpp"

namespace qgabor {

/// Sampling controls for the (b, w) phase-space sets. b runs over the signal
/// grid with stride `b_stride`; w runs over the reciprocal grid of the
/// `pad`-times zero-padded domain with stride `w_stride`, truncated to
/// |wrapped w| <= w_max per axis. Defaults reuse the plain reciprocal grid.
struct WqftOptions {
    std::int64_t b_stride{1};
    std::int64_t w_stride{1};
    std::int64_t pad{1};
    double w_max{std::numeric_limits<double>::infinity()};
    std::int64_t memory_guard_bytes{std::int64_t{1} << 30};
};

/// Windowed transform samples Q_g f(b, w) on a product set of b and w
/// points, with the quadrature weights of the sampling.
struct WqftCoefficients {
    std::vector<double> b1, b2;          // translation coordinates
    std::vector<std::int64_t> w1_bins, w2_bins;  // bins in the padded reciprocal grid
    std::vector<double> w1, w2;          // wrapped frequency values of those bins
    Grid2 padded_reciprocal{};           // bin layout metadata
    double db_area{0.0};                 // b-quadrature cell
    double dw_area{0.0};                 // w-quadrature cell
    std::vector<Quaternion> values;      // ((ib1*nb2 + ib2)*nw1 + iw1)*nw2 + iw2

    std::size_t index(std::size_t ib1, std::size_t ib2, std::size_t iw1, std::size_t iw2) const {
        return ((ib1 * b2.size() + ib2) * w1_bins.size() + iw1) * w2_bins.size() + iw2;
    }
    const Quaternion& at(std::size_t ib1, std::size_t ib2, std::size_t iw1,
                         std::size_t iw2) const {
        return values[index(ib1, ib2, iw1, iw2)];
    }
};

/// Q_g f(b, w) = int exp(-2 pi i x1 w1) f(x) g(x - b) exp(-2 pi j x2 w2) dx,
/// evaluated per b by pre-windowing and one fast transform. Throws on a zero
/// window or when the materialized array would exceed the memory guard.
WqftCoefficients wqft(const QField& f, const QField& g_real, const WqftOptions& opts = {});

/// Streaming form: calls `emit` once per b point with the w-slice values
/// laid out as iw1 * nw2 + iw2. Used by wqft() and by larger sweeps.
void wqft_foreach_b(
    const QField& f, const QField& g_real, const WqftOptions& opts,
    const std::function<void(std::size_t ib1, std::size_t ib2, const std::vector<Quaternion>&)>& emit);

/// Direct summation of the defining sandwiched kernel at one (b, w); an
/// independent code path used to validate the fast route.
Quaternion wqft_point_direct(const QField& f, const QField& g_real, double b1, double b2,
                             double w1, double w2);

/// (f, M_w T_b g) with the modulation materialized pointwise. Coincides with
/// the sandwiched kernel exactly when f is real-valued; for quaternion f the
/// i-kernel must be carried to the left of f first (carrier conjugation).
Quaternion wqft_inner_form(const QField& f, const QField& g_real, double b1, double b2,
                           double w1, double w2);

/// Discretized reconstruction
///   f(x) ~= (1/||g||^2) sum_b sum_w e^{2 pi i x1 w1} Q(b,w) g(x-b) e^{2 pi j x2 w2} dw db.
QField wqft_reconstruct(const WqftCoefficients& coeffs, const QField& g_real);

struct OrthogonalityReport {
    double lhs{0.0};
    double rhs{0.0};
    double rel_err{0.0};
};

/// <Q_g f, Q_g h> over the sampled (b, w) set against ||g||^2 <f, h>.
OrthogonalityReport orthogonality_check(const QField& f, const QField& h, const QField& g_real,
                                        const WqftOptions& opts = {});

struct CovarianceReport {
    double max_defect_translation{0.0};
    double max_defect_modulation{0.0};
};

/// Covariance of the windowed transform under translation by x0 and
/// conjugate-modulation by w0. x0 must be grid-aligned and w0 must lie on
/// the reciprocal lattice of the sampling.
CovarianceReport covariance_check(const QField& f, const QField& g_real, double x01, double x02,
                                  double w01, double w02);

}  // namespace qgabor
