#pragma once

#include <cmath>

namespace qgabor {

/// Quaternion q = w + x*i + y*j + z*k with ij = -ji = k, i^2 = j^2 = k^2 = -1.
/// Component storage order is (w, x, y, z) matching the basis (1, i, j, k);
/// the QF2 file format relies on this order bit-exactly.
struct Quaternion {
    double w{0.0};
    double x{0.0};
    double y{0.0};
    double z{0.0};

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion real(double s) { return {s, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion zero() { return {0.0, 0.0, 0.0, 0.0}; }

    constexpr Quaternion& operator+=(const Quaternion& r) {
        w += r.w; x += r.x; y += r.y; z += r.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& r) {
        w -= r.w; x -= r.x; y -= r.y; z -= r.z;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }

    friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
    friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
    friend constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
    friend constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
    friend constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }

    friend constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
    }
};

/// Hamilton product. Non-commutative, associative.
constexpr Quaternion mul(const Quaternion& p, const Quaternion& q) {
    return {
        p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
        p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
        p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
        p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
    };
}

constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) { return mul(p, q); }

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

constexpr double norm_sq(const Quaternion& q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double abs(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

/// Sc[q] = q.w. Satisfies the cyclic identity Sc[pqr] = Sc[qrp] = Sc[rpq].
constexpr double scalar_part(const Quaternion& q) { return q.w; }

enum class CarrierSide { Left, Right };

/// Right carrier C_r(p) q = q p, left carrier q C_l(p) = p q.
constexpr Quaternion carrier_apply(CarrierSide side, const Quaternion& p, const Quaternion& q) {
    return side == CarrierSide::Right ? mul(q, p) : mul(p, q);
}

/// exp(i*theta) = cos(theta) + i sin(theta), an element of span{1, i}.
inline Quaternion exp_i(double theta) { return {std::cos(theta), std::sin(theta), 0.0, 0.0}; }

/// exp(j*theta) = cos(theta) + j sin(theta), an element of span{1, j}.
inline Quaternion exp_j(double theta) { return {std::cos(theta), 0.0, std::sin(theta), 0.0}; }

inline bool is_finite(const Quaternion& q) {
    return std::isfinite(q.w) && std::isfinite(q.x) && std::isfinite(q.y) && std::isfinite(q.z);
}

}  // namespace qgabor
