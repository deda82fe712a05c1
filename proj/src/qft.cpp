#include "qgabor/qft.hpp"

#include <cmath>
#include <stdexcept>

#include "qgabor/fft.hpp"

namespace qgabor {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kPi = 3.1415926535897932384626433832795;

// Axis-2 pass, j-kernel on the right: q * exp(sign 2 pi j b v / n2).
// Split q = w1 + i w2 with w1 = (w, y), w2 = (x, z) in span{1, j}; the right
// factor acts as an ordinary complex multiplication on both halves.
void pass_axis2_right_j(QField& f, int sign) {
    const std::int64_t n1 = f.n1(), n2 = f.n2();
    std::vector<std::complex<double>> w1(static_cast<std::size_t>(n2)),
        w2(static_cast<std::size_t>(n2));
    for (std::int64_t a = 0; a < n1; ++a) {
        for (std::int64_t b = 0; b < n2; ++b) {
            const Quaternion& q = f.at(a, b);
            w1[static_cast<std::size_t>(b)] = {q.w, q.y};
            w2[static_cast<std::size_t>(b)] = {q.x, q.z};
        }
        detail::fft(w1, sign);
        detail::fft(w2, sign);
        for (std::int64_t b = 0; b < n2; ++b) {
            const auto& c1 = w1[static_cast<std::size_t>(b)];
            const auto& c2 = w2[static_cast<std::size_t>(b)];
            f.at(a, b) = {c1.real(), c2.real(), c1.imag(), c2.imag()};
        }
    }
}

// Axis-1 pass, i-kernel on the left: exp(sign 2 pi i a u / n1) * q.
// Split q = v1 + v2 j with v1 = (w, x), v2 = (y, z) in span{1, i}.
void pass_axis1_left_i(QField& f, int sign) {
    const std::int64_t n1 = f.n1(), n2 = f.n2();
    std::vector<std::complex<double>> v1(static_cast<std::size_t>(n1)),
        v2(static_cast<std::size_t>(n1));
    for (std::int64_t b = 0; b < n2; ++b) {
        for (std::int64_t a = 0; a < n1; ++a) {
            const Quaternion& q = f.at(a, b);
            v1[static_cast<std::size_t>(a)] = {q.w, q.x};
            v2[static_cast<std::size_t>(a)] = {q.y, q.z};
        }
        detail::fft(v1, sign);
        detail::fft(v2, sign);
        for (std::int64_t a = 0; a < n1; ++a) {
            const auto& c1 = v1[static_cast<std::size_t>(a)];
            const auto& c2 = v2[static_cast<std::size_t>(a)];
            f.at(a, b) = {c1.real(), c1.imag(), c2.real(), c2.imag()};
        }
    }
}

// Axis-1 pass, i-kernel on the right: q * exp(sign 2 pi i a u / n1).
// With q = v1 + v2 j, the j half sees the conjugate kernel (j e^{it} = e^{-it} j).
void pass_axis1_right_i(QField& f, int sign) {
    const std::int64_t n1 = f.n1(), n2 = f.n2();
    std::vector<std::complex<double>> v1(static_cast<std::size_t>(n1)),
        v2(static_cast<std::size_t>(n1));
    for (std::int64_t b = 0; b < n2; ++b) {
        for (std::int64_t a = 0; a < n1; ++a) {
            const Quaternion& q = f.at(a, b);
            v1[static_cast<std::size_t>(a)] = {q.w, q.x};
            v2[static_cast<std::size_t>(a)] = {q.y, q.z};
        }
        detail::fft(v1, sign);
        detail::fft(v2, -sign);
        for (std::int64_t a = 0; a < n1; ++a) {
            const auto& c1 = v1[static_cast<std::size_t>(a)];
            const auto& c2 = v2[static_cast<std::size_t>(a)];
            f.at(a, b) = {c1.real(), c1.imag(), c2.real(), c2.imag()};
        }
    }
}

}  // namespace

QField qft_forward(const QField& f) {
    QField out = f;
    pass_axis2_right_j(out, -1);
    pass_axis1_left_i(out, -1);
    const Grid2& g = f.grid();
    const Grid2 rg = reciprocal_grid(g);
    const double area = g.cell_area();
    for (std::int64_t u = 0; u < rg.n1; ++u) {
        const Quaternion lp = exp_i(-kTwoPi * g.x1_min * static_cast<double>(u) * rg.dx1);
        for (std::int64_t v = 0; v < rg.n2; ++v) {
            const Quaternion rp = exp_j(-kTwoPi * g.x2_min * static_cast<double>(v) * rg.dx2);
            out.at(u, v) = mul(mul(lp, out.at(u, v)), rp) * area;
        }
    }
    return QField(rg, std::move(out.data()));
}

QField qft_inverse(const QField& F, double x1_min, double x2_min) {
    const Grid2& rg = F.grid();
    Grid2 g;
    g.n1 = rg.n1;
    g.n2 = rg.n2;
    g.dx1 = 1.0 / (static_cast<double>(rg.n1) * rg.dx1);
    g.dx2 = 1.0 / (static_cast<double>(rg.n2) * rg.dx2);
    g.x1_min = x1_min;
    g.x2_min = x2_min;

    QField work = F;
    for (std::int64_t u = 0; u < rg.n1; ++u) {
        const Quaternion lp = exp_i(kTwoPi * x1_min * static_cast<double>(u) * rg.dx1);
        for (std::int64_t v = 0; v < rg.n2; ++v) {
            const Quaternion rp = exp_j(kTwoPi * x2_min * static_cast<double>(v) * rg.dx2);
            work.at(u, v) = mul(mul(lp, work.at(u, v)), rp);
        }
    }
    pass_axis1_left_i(work, +1);
    pass_axis2_right_j(work, +1);
    const double dw = rg.cell_area();
    for (auto& q : work.data()) q *= dw;
    return QField(g, std::move(work.data()));
}

QField qft_inverse(const QField& F) {
    const Grid2& rg = F.grid();
    const double dx1 = 1.0 / (static_cast<double>(rg.n1) * rg.dx1);
    const double dx2 = 1.0 / (static_cast<double>(rg.n2) * rg.dx2);
    return qft_inverse(F, -static_cast<double>(rg.n1 / 2) * dx1,
                       -static_cast<double>(rg.n2 / 2) * dx2);
}

QField rr_forward(const QField& h) {
    QField out = h;
    const Grid2& g = h.grid();
    const Grid2 rg = reciprocal_grid(g);

    pass_axis1_right_i(out, -1);
    for (std::int64_t u = 0; u < rg.n1; ++u) {
        const Quaternion ip = exp_i(-kTwoPi * g.x1_min * static_cast<double>(u) * rg.dx1);
        for (std::int64_t b = 0; b < g.n2; ++b) out.at(u, b) = mul(out.at(u, b), ip);
    }
    pass_axis2_right_j(out, -1);
    const double area = g.cell_area();
    for (std::int64_t u = 0; u < rg.n1; ++u)
        for (std::int64_t v = 0; v < rg.n2; ++v) {
            const Quaternion jp = exp_j(-kTwoPi * g.x2_min * static_cast<double>(v) * rg.dx2);
            out.at(u, v) = mul(out.at(u, v), jp) * area;
        }
    return QField(rg, std::move(out.data()));
}

QField rr_inverse_sum(const QField& c, const Grid2& signal_grid, bool i_kernel_first) {
    const Grid2& rg = c.grid();
    if (signal_grid.n1 != rg.n1 || signal_grid.n2 != rg.n2)
        throw std::invalid_argument("rr_inverse_sum: grid sizes mismatch");

    QField work = c;
    if (i_kernel_first) {
        for (std::int64_t u = 0; u < rg.n1; ++u) {
            const Quaternion ip =
                exp_i(kTwoPi * signal_grid.x1_min * static_cast<double>(u) * rg.dx1);
            for (std::int64_t v = 0; v < rg.n2; ++v) work.at(u, v) = mul(work.at(u, v), ip);
        }
        pass_axis1_right_i(work, +1);
        for (std::int64_t a = 0; a < rg.n1; ++a)
            for (std::int64_t v = 0; v < rg.n2; ++v) {
                const Quaternion jp =
                    exp_j(kTwoPi * signal_grid.x2_min * static_cast<double>(v) * rg.dx2);
                work.at(a, v) = mul(work.at(a, v), jp);
            }
        pass_axis2_right_j(work, +1);
    } else {
        for (std::int64_t u = 0; u < rg.n1; ++u)
            for (std::int64_t v = 0; v < rg.n2; ++v) {
                const Quaternion jp =
                    exp_j(kTwoPi * signal_grid.x2_min * static_cast<double>(v) * rg.dx2);
                work.at(u, v) = mul(work.at(u, v), jp);
            }
        pass_axis2_right_j(work, +1);
        for (std::int64_t u = 0; u < rg.n1; ++u) {
            const Quaternion ip =
                exp_i(kTwoPi * signal_grid.x1_min * static_cast<double>(u) * rg.dx1);
            for (std::int64_t b = 0; b < rg.n2; ++b) work.at(u, b) = mul(work.at(u, b), ip);
        }
        pass_axis1_right_i(work, +1);
    }
    return QField(signal_grid, std::move(work.data()));
}

QField zero_pad(const QField& f, std::int64_t factor) {
    if (factor < 1) throw std::invalid_argument("zero_pad: factor must be >= 1");
    if (factor == 1) return f;
    const Grid2& g = f.grid();
    Grid2 pg = g;
    pg.n1 = g.n1 * factor;
    pg.n2 = g.n2 * factor;
    const std::int64_t o1 = (pg.n1 - g.n1) / 2;
    const std::int64_t o2 = (pg.n2 - g.n2) / 2;
    pg.x1_min = g.x1_min - static_cast<double>(o1) * g.dx1;
    pg.x2_min = g.x2_min - static_cast<double>(o2) * g.dx2;
    QField out(pg);
    for (std::int64_t a = 0; a < g.n1; ++a)
        for (std::int64_t b = 0; b < g.n2; ++b) out.at(a + o1, b + o2) = f.at(a, b);
    return out;
}

QField low_pass_roundtrip(const QField& f, double cutoff) {
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

UncertaintyReport uncertainty(const QField& f) {
    const double peak = max_abs(f);
    if (peak == 0.0) throw std::domain_error("uncertainty: zero field");
    double boundary = 0.0;
    for (std::int64_t a = 0; a < f.n1(); ++a) {
        boundary = std::max(boundary, qgabor::abs(f.at(a, 0)));
        boundary = std::max(boundary, qgabor::abs(f.at(a, f.n2() - 1)));
    }
    for (std::int64_t b = 0; b < f.n2(); ++b) {
        boundary = std::max(boundary, qgabor::abs(f.at(0, b)));
        boundary = std::max(boundary, qgabor::abs(f.at(f.n1() - 1, b)));
    }
    if (boundary > 1e-10 * peak)
        throw std::domain_error("uncertainty: field has not decayed at the domain boundary");

    UncertaintyReport rep;
    rep.bound = 1.0 / (4.0 * kPi);

    const Grid2& g = f.grid();
    double mass = 0.0, m1 = 0.0, m2 = 0.0;
    for (std::int64_t a = 0; a < g.n1; ++a) {
        const double x1 = g.x1(a);
        for (std::int64_t b = 0; b < g.n2; ++b) {
            const double x2 = g.x2(b);
            const double p = norm_sq(f.at(a, b));
            mass += p;
            m1 += p * x1 * x1;
            m2 += p * x2 * x2;
        }
    }
    rep.delta_x = {std::sqrt(m1 / mass), std::sqrt(m2 / mass)};

    const QField F = qft_forward(f);
    const Grid2& rg = F.grid();
    double fmass = 0.0, f1 = 0.0, f2 = 0.0;
    for (std::int64_t u = 0; u < rg.n1; ++u) {
        const double w1 = wrapped_freq(u, rg.n1, rg.dx1);
        for (std::int64_t v = 0; v < rg.n2; ++v) {
            const double w2 = wrapped_freq(v, rg.n2, rg.dx2);
            const double p = norm_sq(F.at(u, v));
            fmass += p;
            f1 += p * w1 * w1;
            f2 += p * w2 * w2;
        }
    }
    rep.delta_omega = {std::sqrt(f1 / fmass), std::sqrt(f2 / fmass)};
    rep.products = {rep.delta_x[0] * rep.delta_omega[0], rep.delta_x[1] * rep.delta_omega[1]};
    return rep;
}

}  // namespace qgabor
