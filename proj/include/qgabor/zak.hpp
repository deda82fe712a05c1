#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "qgabor/field.hpp"
#include "qgabor/window.hpp"

namespace qgabor {

/// Inclusive lattice truncation range for the Zak sums.
struct MRange {
    std::int64_t lo{0};
    std::int64_t hi{0};
    std::int64_t count() const { return hi - lo + 1; }
};

inline MRange symmetric_range(std::int64_t m) { return {-m, m}; }

/// Range closed under the pairing m <-> 1-m, which is the pairing that
/// cancels the Gaussian Zak sum at the critical point under this transform's
/// sign convention.
inline MRange pair_complete_range(std::int64_t m) { return {-m, m + 1}; }

/// Evaluation source for Zak sums: analytic windows evaluate anywhere;
/// sampled fields restrict x to grid points and read 0 outside their domain
/// (the field represents a decaying signal, not its periodization here).
class ZakSource {
public:
    static ZakSource analytic(const WindowSpec& spec);
    static ZakSource sampled(QField field);
    static ZakSource functor(std::function<Quaternion(double, double)> fn);

    Quaternion operator()(double x1, double x2) const { return eval_(x1, x2); }

private:
    std::function<Quaternion(double, double)> eval_;
};

/// Z^alpha f(x, w) = sum_m exp(2 pi j alpha m2 w2) f(x - alpha m)
///                        exp(2 pi i alpha m1 w1), truncated to `range`.
Quaternion zak_point(const ZakSource& f, double alpha, double x1, double x2, double w1,
                     double w2, const MRange& range);

/// Same sum over explicit index lists (used for pair-broken negative controls).
Quaternion zak_point_list(const ZakSource& f, double alpha, double x1, double x2, double w1,
                          double w2, std::span<const std::int64_t> m1,
                          std::span<const std::int64_t> m2);

/// Loose tail estimate for the truncated Gaussian Zak sum with x in Q_alpha.
double gaussian_zak_tail_bound(double alpha, std::int64_t trunc);

/// Z^alpha f sampled on the fundamental cube Q_alpha x Q_{1/alpha}:
/// x = (i1, i2) * alpha / (r1, r2), w = (l1, l2) / (alpha * (s1, s2)).
struct ZakField {
    double alpha{1.0};
    std::int64_t r1{0}, r2{0}, s1{0}, s2{0};
    MRange range{};
    std::vector<Quaternion> values;  // ((i1*r2 + i2)*s1 + l1)*s2 + l2

    double x1(std::int64_t i) const { return static_cast<double>(i) * alpha / static_cast<double>(r1); }
    double x2(std::int64_t i) const { return static_cast<double>(i) * alpha / static_cast<double>(r2); }
    double w1(std::int64_t l) const { return static_cast<double>(l) / (alpha * static_cast<double>(s1)); }
    double w2(std::int64_t l) const { return static_cast<double>(l) / (alpha * static_cast<double>(s2)); }
    double cell_volume() const {
        return (alpha / static_cast<double>(r1)) * (alpha / static_cast<double>(r2)) /
               (alpha * static_cast<double>(s1)) / (alpha * static_cast<double>(s2));
    }
    std::size_t index(std::int64_t i1, std::int64_t i2, std::int64_t l1, std::int64_t l2) const {
        return static_cast<std::size_t>(((i1 * r2 + i2) * s1 + l1) * s2 + l2);
    }
    const Quaternion& at(std::int64_t i1, std::int64_t i2, std::int64_t l1,
                         std::int64_t l2) const {
        return values[index(i1, i2, l1, l2)];
    }
};

ZakField zak_grid(const ZakSource& f, double alpha, std::int64_t r1, std::int64_t r2,
                  std::int64_t s1, std::int64_t s2, const MRange& range);

/// 4-D scalar product sum Sc[a conj(b)] * cell volume over the cube.
double zak_inner_sc(const ZakField& a, const ZakField& b);

struct QuasiperiodicityReport {
    double defect_w{0.0};  // |Z(x, w + 1/alpha) - Z(x, w)|
    double defect_x{0.0};  // |Z(x + alpha, w) - e^{2 pi j alpha w2} Z(x, w) e^{2 pi i alpha w1}|
};

QuasiperiodicityReport quasiperiodicity_check(const ZakSource& f, double alpha, double x1,
                                              double x2, double w1, double w2,
                                              std::int64_t trunc);

/// f(x) = alpha^2 int_{Q_{1/alpha}} Z f(x, w) dw, evaluated as a Riemann sum
/// over the w-grid; returns f on the Q_alpha sample grid. Exact when the
/// truncation is below the w-grid resolution (|m| < s).
QField zak_inverse(const ZakField& z);

/// Closed form for Z(M_{k/alpha} T_{alpha n} g)(x, w).
Quaternion zak_mt_window(const ZakSource& g, double alpha, std::int64_t k1, std::int64_t k2,
                         std::int64_t n1, std::int64_t n2, double x1, double x2, double w1,
                         double w2, const MRange& range);

struct RatioReport {
    double lhs{0.0};
    double rhs{0.0};
    double rel_err{0.0};
};

/// Unitarity check <Z phi, Z psi> vs alpha^{-2} <phi, psi>; the field-side
/// scalar product is passed in by the caller.
RatioReport zak_parseval_check(const ZakField& zphi, const ZakField& zpsi, double inner_phi_psi,
                               double alpha);

/// Lattice sum identity at critical density: sum_{|k|,|n| <= K} of the
/// squared scalar coefficients <f, M_{k/alpha} T_{alpha n} g> against
/// alpha^4 ||Z f conj(Z g)||^2. Also reports the quaternionic-coefficient
/// sum, which the identity actually matches for non-real signals.
struct SumIdentityReport {
    double lhs{0.0};
    double rhs{0.0};
    double rel_err{0.0};
    double lhs_quaternionic{0.0};
};

SumIdentityReport sum_identity_check(const QField& f, const QField& g_real, double alpha,
                                     std::int64_t r, std::int64_t s, std::int64_t trunc,
                                     std::int64_t K);

}  // namespace qgabor
