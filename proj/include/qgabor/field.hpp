#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "qgabor/quaternion.hpp"

namespace qgabor {

/// Uniform rectangular sampling of R^2. Sample (a, b) sits at
/// (x1_min + a*dx1, x2_min + b*dx2); indices wrap modulo (n1, n2), so the
/// field represents one period of a periodic extension with periods
/// L1 = n1*dx1 and L2 = n2*dx2.
struct Grid2 {
    std::int64_t n1{0};
    std::int64_t n2{0};
    double x1_min{0.0};
    double x2_min{0.0};
    double dx1{0.0};
    double dx2{0.0};

    double len1() const { return static_cast<double>(n1) * dx1; }
    double len2() const { return static_cast<double>(n2) * dx2; }
    double x1(std::int64_t a) const { return x1_min + static_cast<double>(a) * dx1; }
    double x2(std::int64_t b) const { return x2_min + static_cast<double>(b) * dx2; }
    double cell_area() const { return dx1 * dx2; }
    std::int64_t size() const { return n1 * n2; }

    void validate() const;

    friend bool operator==(const Grid2& a, const Grid2& b) = default;
};

/// Grid2 covering [x_min, x_max) x [x_min, x_max) with n samples per axis.
Grid2 make_square_grid(std::int64_t n, double x_min, double x_max);

/// Frequency-domain grid of the transform of `g`: DC-first layout with
/// spacings (1/L1, 1/L2).
Grid2 reciprocal_grid(const Grid2& g);

/// Signed frequency represented by DFT bin `u` of `n` bins with spacing `d`.
double wrapped_freq(std::int64_t u, std::int64_t n, double d);

/// Sampled quaternion-valued function on a Grid2. Immutable by convention:
/// operations return new fields.
class QField {
public:
    QField() = default;
    explicit QField(const Grid2& grid)
        : grid_(grid), data_(static_cast<std::size_t>(grid.size())) {
        grid_.validate();
    }
    QField(const Grid2& grid, std::vector<Quaternion> data);

    const Grid2& grid() const { return grid_; }
    std::int64_t n1() const { return grid_.n1; }
    std::int64_t n2() const { return grid_.n2; }

    const Quaternion& at(std::int64_t a, std::int64_t b) const {
        return data_[static_cast<std::size_t>(a * grid_.n2 + b)];
    }
    Quaternion& at(std::int64_t a, std::int64_t b) {
        return data_[static_cast<std::size_t>(a * grid_.n2 + b)];
    }
    /// Periodic lookup: indices wrap modulo (n1, n2).
    const Quaternion& at_wrapped(std::int64_t a, std::int64_t b) const;

    const std::vector<Quaternion>& data() const { return data_; }
    std::vector<Quaternion>& data() { return data_; }

    bool all_finite() const;

private:
    Grid2 grid_{};
    std::vector<Quaternion> data_{};
};

QField map_field(const Grid2& grid, const std::function<Quaternion(double, double)>& fn);

/// Quaternion-valued inner product (f, g) = sum f conj(g) dx1 dx2.
Quaternion inner_q(const QField& f, const QField& g);

/// Real scalar product <f, g> = Sc (f, g); symmetric, <f, f> = ||f||^2.
double inner_sc(const QField& f, const QField& g);

double norm_sq(const QField& f);

QField add(const QField& f, const QField& g);
QField sub(const QField& f, const QField& g);
QField scale(const QField& f, double s);
/// Left quaternion scaling: (lambda f)(x) = lambda * f(x).
QField scale_left(const QField& f, const Quaternion& lambda);
/// Pointwise product with a real-valued field (used for windowing).
QField mul_real(const QField& f, const QField& g_real);

double max_abs(const QField& f);
double max_abs_diff(const QField& f, const QField& g);

/// (T_b f)(x) = f(x - b) with periodic wrap. b must be grid-aligned; a
/// non-aligned b snaps to the nearest sample and warns on stderr.
QField translate(const QField& f, double b1, double b2);

/// (M_w f)(x) = exp(2 pi j w2 x2) f(x) exp(2 pi i w1 x1); the right carrier
/// places the i-exponential on the right of the signal value.
QField modulate(const QField& f, double w1, double w2);

/// Carrier-conjugate modulation: exp(2 pi i w1 x1) f(x) exp(2 pi j w2 x2).
/// This is the operator written conj(M_{-w}) in operator identities.
QField conj_modulate(const QField& f, double w1, double w2);

struct CommutationReport {
    double twisted_defect{0.0};  // T_b M_w g vs phase-twisted M_w T_b g
    double plain_defect{0.0};    // T_b M_w g vs M_w T_b g
};

/// Checks T_b M_w g = exp(2 pi j b2 w2) (M_w T_b g) exp(2 pi i b1 w1)
/// pointwise, and reports the plain commutator defect alongside.
CommutationReport commutation_check(const QField& g, double b1, double b2, double w1,
                                    double w2);

/// Wiener-Amalgam norm: sum over half-open tiles [alpha n1, alpha(n1+1)) x
/// [alpha n2, alpha(n2+1)) of the per-tile sup of |g| over grid samples,
/// truncated to the field's domain. alpha must tile the grid spacings.
double wiener_amalgam_norm(const QField& g_real, double alpha);

/// Rounded integer k with b = k*dx (|b/dx - k| <= tol); throws if requested.
std::int64_t aligned_steps(double b, double dx, bool* exact = nullptr);

}  // namespace qgabor
