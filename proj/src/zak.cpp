#include "qgabor/zak.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "qgabor/gabor.hpp"
#include "qgabor/parallel.hpp"

namespace qgabor {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kPi = 3.1415926535897932384626433832795;
constexpr std::int64_t kZakMemoryGuardBytes = std::int64_t{1} << 30;
}  // namespace

ZakSource ZakSource::analytic(const WindowSpec& spec) {
    ZakSource s;
    s.eval_ = [spec](double x1, double x2) {
        return Quaternion::real(window_value(spec, x1, x2));
    };
    return s;
}

ZakSource ZakSource::sampled(QField field) {
    auto held = std::make_shared<const QField>(std::move(field));
    ZakSource s;
    s.eval_ = [held](double x1, double x2) {
        const Grid2& g = held->grid();
        bool e1 = false, e2 = false;
        const std::int64_t a = aligned_steps(x1 - g.x1_min, g.dx1, &e1);
        const std::int64_t b = aligned_steps(x2 - g.x2_min, g.dx2, &e2);
        if (!e1 || !e2)
            throw std::invalid_argument("zak: sampled sources require grid-aligned x");
        if (a < 0 || a >= g.n1 || b < 0 || b >= g.n2) return Quaternion::zero();
        return held->at(a, b);
    };
    return s;
}

ZakSource ZakSource::functor(std::function<Quaternion(double, double)> fn) {
    ZakSource s;
    s.eval_ = std::move(fn);
    return s;
}

Quaternion zak_point(const ZakSource& f, double alpha, double x1, double x2, double w1,
                     double w2, const MRange& range) {
    Quaternion out{};
    for (std::int64_t m2 = range.lo; m2 <= range.hi; ++m2) {
        Quaternion inner{};
        const double y2 = x2 - alpha * static_cast<double>(m2);
        for (std::int64_t m1 = range.lo; m1 <= range.hi; ++m1) {
            const double y1 = x1 - alpha * static_cast<double>(m1);
            inner += mul(f(y1, y2), exp_i(kTwoPi * alpha * static_cast<double>(m1) * w1));
        }
        out += mul(exp_j(kTwoPi * alpha * static_cast<double>(m2) * w2), inner);
    }
    return out;
}

Quaternion zak_point_list(const ZakSource& f, double alpha, double x1, double x2, double w1,
                          double w2, std::span<const std::int64_t> m1s,
                          std::span<const std::int64_t> m2s) {
    Quaternion out{};
    for (const std::int64_t m2 : m2s) {
        Quaternion inner{};
        const double y2 = x2 - alpha * static_cast<double>(m2);
        for (const std::int64_t m1 : m1s) {
            const double y1 = x1 - alpha * static_cast<double>(m1);
            inner += mul(f(y1, y2), exp_i(kTwoPi * alpha * static_cast<double>(m1) * w1));
        }
        out += mul(exp_j(kTwoPi * alpha * static_cast<double>(m2) * w2), inner);
    }
    return out;
}

double gaussian_zak_tail_bound(double alpha, std::int64_t trunc) {
    // nearest excluded term sits at distance >= alpha (trunc - 1) from Q_alpha
    const double d = alpha * static_cast<double>(trunc - 1);
    return 8.0 * std::exp(-kPi * d * d);
}

ZakField zak_grid(const ZakSource& f, double alpha, std::int64_t r1, std::int64_t r2,
                  std::int64_t s1, std::int64_t s2, const MRange& range) {
    if (r1 < 2 || r2 < 2 || s1 < 2 || s2 < 2)
        throw std::invalid_argument("zak_grid: need at least 2 samples per axis");
    const std::int64_t cells = r1 * r2 * s1 * s2;
    if (cells * static_cast<std::int64_t>(sizeof(Quaternion)) > kZakMemoryGuardBytes)
        throw std::length_error("zak_grid: requested grid exceeds the memory guard");

    ZakField z;
    z.alpha = alpha;
    z.r1 = r1;
    z.r2 = r2;
    z.s1 = s1;
    z.s2 = s2;
    z.range = range;
    z.values.resize(static_cast<std::size_t>(cells));

    const std::int64_t mc = range.count();
    // phase tables: exp(+-2 pi alpha m w) for every (m, w-sample)
    std::vector<Quaternion> itab(static_cast<std::size_t>(mc * s1));
    for (std::int64_t mi = 0; mi < mc; ++mi)
        for (std::int64_t l1 = 0; l1 < s1; ++l1)
            itab[static_cast<std::size_t>(mi * s1 + l1)] =
                exp_i(kTwoPi * alpha * static_cast<double>(range.lo + mi) * z.w1(l1));
    std::vector<Quaternion> jtab(static_cast<std::size_t>(mc * s2));
    for (std::int64_t mi = 0; mi < mc; ++mi)
        for (std::int64_t l2 = 0; l2 < s2; ++l2)
            jtab[static_cast<std::size_t>(mi * s2 + l2)] =
                exp_j(kTwoPi * alpha * static_cast<double>(range.lo + mi) * z.w2(l2));

    parallel_for(r1, [&](std::int64_t i1) {
        std::vector<Quaternion> fvals(static_cast<std::size_t>(mc * mc));
        std::vector<Quaternion> t(static_cast<std::size_t>(mc));
        const double x1 = z.x1(i1);
        for (std::int64_t i2 = 0; i2 < r2; ++i2) {
            const double x2 = z.x2(i2);
            for (std::int64_t a = 0; a < mc; ++a)
                for (std::int64_t b = 0; b < mc; ++b)
                    fvals[static_cast<std::size_t>(a * mc + b)] =
                        f(x1 - alpha * static_cast<double>(range.lo + a),
                          x2 - alpha * static_cast<double>(range.lo + b));
            for (std::int64_t l1 = 0; l1 < s1; ++l1) {
                // inner sums over m1 for each m2
                for (std::int64_t b = 0; b < mc; ++b) {
                    Quaternion acc{};
                    for (std::int64_t a = 0; a < mc; ++a)
                        acc += mul(fvals[static_cast<std::size_t>(a * mc + b)],
                                   itab[static_cast<std::size_t>(a * s1 + l1)]);
                    t[static_cast<std::size_t>(b)] = acc;
                }
                for (std::int64_t l2 = 0; l2 < s2; ++l2) {
                    Quaternion acc{};
                    for (std::int64_t b = 0; b < mc; ++b)
                        acc += mul(jtab[static_cast<std::size_t>(b * s2 + l2)],
                                   t[static_cast<std::size_t>(b)]);
                    z.values[z.index(i1, i2, l1, l2)] = acc;
                }
            }
        }
    });
    return z;
}

double zak_inner_sc(const ZakField& a, const ZakField& b) {
    if (a.values.size() != b.values.size())
        throw std::invalid_argument("zak_inner_sc: grids differ");
    double acc = 0.0;
    for (std::size_t k = 0; k < a.values.size(); ++k)
        acc += a.values[k].w * b.values[k].w + a.values[k].x * b.values[k].x +
               a.values[k].y * b.values[k].y + a.values[k].z * b.values[k].z;
    return acc * a.cell_volume();
}

QuasiperiodicityReport quasiperiodicity_check(const ZakSource& f, double alpha, double x1,
                                              double x2, double w1, double w2,
                                              std::int64_t trunc) {
    const MRange range = symmetric_range(trunc);
    const Quaternion base = zak_point(f, alpha, x1, x2, w1, w2, range);

    QuasiperiodicityReport rep;
    const Quaternion wshift =
        zak_point(f, alpha, x1, x2, w1 + 1.0 / alpha, w2 + 1.0 / alpha, range);
    rep.defect_w = abs(wshift - base);

    const Quaternion xshift = zak_point(f, alpha, x1 + alpha, x2 + alpha, w1, w2, range);
    const Quaternion expect =
        mul(mul(exp_j(kTwoPi * alpha * w2), base), exp_i(kTwoPi * alpha * w1));
    rep.defect_x = abs(xshift - expect);
    return rep;
}

QField zak_inverse(const ZakField& z) {
    Grid2 g;
    g.n1 = z.r1;
    g.n2 = z.r2;
    g.x1_min = 0.0;
    g.x2_min = 0.0;
    g.dx1 = z.alpha / static_cast<double>(z.r1);
    g.dx2 = z.alpha / static_cast<double>(z.r2);
    QField out(g);
    const double weight = 1.0 / (static_cast<double>(z.s1) * static_cast<double>(z.s2));
    for (std::int64_t i1 = 0; i1 < z.r1; ++i1)
        for (std::int64_t i2 = 0; i2 < z.r2; ++i2) {
            Quaternion acc{};
            for (std::int64_t l1 = 0; l1 < z.s1; ++l1)
                for (std::int64_t l2 = 0; l2 < z.s2; ++l2) acc += z.at(i1, i2, l1, l2);
            out.at(i1, i2) = acc * weight;
        }
    return out;
}

Quaternion zak_mt_window(const ZakSource& g, double alpha, std::int64_t k1, std::int64_t k2,
                         std::int64_t n1, std::int64_t n2, double x1, double x2, double w1,
                         double w2, const MRange& range) {
    const Quaternion zg = zak_point(g, alpha, x1, x2, w1, w2, range);
    const Quaternion left = mul(exp_j(-kTwoPi * alpha * static_cast<double>(n2) * w2),
                                exp_j(kTwoPi * static_cast<double>(k2) * x2 / alpha));
    const Quaternion right = mul(exp_i(kTwoPi * static_cast<double>(k1) * x1 / alpha),
                                 exp_i(-kTwoPi * alpha * static_cast<double>(n1) * w1));
    return mul(mul(left, zg), right);
}

RatioReport zak_parseval_check(const ZakField& zphi, const ZakField& zpsi, double inner_phi_psi,
                               double alpha) {
    RatioReport rep;
    rep.lhs = zak_inner_sc(zphi, zpsi);
    rep.rhs = inner_phi_psi / (alpha * alpha);
    rep.rel_err = std::abs(rep.lhs - rep.rhs) / std::max(std::abs(rep.rhs), 1e-300);
    return rep;
}

SumIdentityReport sum_identity_check(const QField& f, const QField& g, double alpha,
                                     std::int64_t r, std::int64_t s, std::int64_t trunc,
                                     std::int64_t K) {
    GaborSystem sys = make_gabor_system(g, alpha, 1.0 / alpha, K);

    const GaborCoefficients sc = analysis(f, sys, CoefficientMode::Scalar);
    const GaborCoefficients qc = analysis(f, sys, CoefficientMode::Quaternionic);
    SumIdentityReport rep;
    const std::int64_t m1_lo = std::max(sys.m1_lo, -K), m1_hi = std::min(sys.m1_hi, K);
    const std::int64_t m2_lo = std::max(sys.m2_lo, -K), m2_hi = std::min(sys.m2_hi, K);
    for (std::int64_t m1 = m1_lo; m1 <= m1_hi; ++m1)
        for (std::int64_t m2 = m2_lo; m2 <= m2_hi; ++m2)
            for (std::int64_t n1 = -K; n1 <= K; ++n1)
                for (std::int64_t n2 = -K; n2 <= K; ++n2) {
                    rep.lhs += norm_sq(sc.at(m1, m2, n1, n2));
                    rep.lhs_quaternionic += norm_sq(qc.at(m1, m2, n1, n2));
                }

    const ZakField zf = zak_grid(ZakSource::sampled(f), alpha, r, r, s, s,
                                 symmetric_range(trunc));
    const ZakField zg = zak_grid(ZakSource::sampled(g), alpha, r, r, s, s,
                                 symmetric_range(trunc));
    double h2 = 0.0;
    for (std::size_t k = 0; k < zf.values.size(); ++k)
        h2 += norm_sq(mul(zf.values[k], conj(zg.values[k])));
    rep.rhs = alpha * alpha * alpha * alpha * h2 * zf.cell_volume();
    rep.rel_err = std::abs(rep.lhs - rep.rhs) / std::max(std::abs(rep.rhs), 1e-300);
    return rep;
}

}  // namespace qgabor
