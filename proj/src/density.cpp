#include "qgabor/density.hpp"

#include <cmath>
#include <stdexcept>

#include "qgabor/parallel.hpp"
#include "qgabor/rng.hpp"

namespace qgabor {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

WindowSpec certification_window(const WindowSpec& g, bool* normalized_out) {
    if (g.kind == WindowKind::Box) {
        if (normalized_out) *normalized_out = true;
        return normalized(g);
    }
    if (normalized_out) *normalized_out = false;
    return g;
}

ZakBoundsLevel sweep_level(const WindowSpec& g, double alpha, std::int64_t r, std::int64_t s,
                           std::int64_t trunc) {
    const ZakSource src = ZakSource::analytic(g);
    const MRange range = symmetric_range(trunc);
    const std::int64_t mc = range.count();

    ZakBoundsLevel level;
    level.r = r;
    level.s = s;
    level.trunc = trunc;

    // phase tables over the w-grid
    std::vector<Quaternion> itab(static_cast<std::size_t>(mc * s)),
        jtab(static_cast<std::size_t>(mc * s));
    for (std::int64_t mi = 0; mi < mc; ++mi)
        for (std::int64_t l = 0; l < s; ++l) {
            const double w = static_cast<double>(l) / (alpha * static_cast<double>(s));
            itab[static_cast<std::size_t>(mi * s + l)] =
                exp_i(kTwoPi * alpha * static_cast<double>(range.lo + mi) * w);
            jtab[static_cast<std::size_t>(mi * s + l)] =
                exp_j(kTwoPi * alpha * static_cast<double>(range.lo + mi) * w);
        }

    struct RowExtrema {
        double lo{0.0}, hi{0.0};
        std::array<double, 4> lo_at{}, hi_at{};
        bool seen{false};
    };
    std::vector<RowExtrema> rows(static_cast<std::size_t>(r));

    parallel_for(r, [&](std::int64_t i1) {
        RowExtrema& row = rows[static_cast<std::size_t>(i1)];
        std::vector<Quaternion> fvals(static_cast<std::size_t>(mc * mc));
        std::vector<Quaternion> t(static_cast<std::size_t>(mc));
        const double x1 = static_cast<double>(i1) * alpha / static_cast<double>(r);
        for (std::int64_t i2 = 0; i2 < r; ++i2) {
            const double x2 = static_cast<double>(i2) * alpha / static_cast<double>(r);
            for (std::int64_t a = 0; a < mc; ++a)
                for (std::int64_t b = 0; b < mc; ++b)
                    fvals[static_cast<std::size_t>(a * mc + b)] =
                        src(x1 - alpha * static_cast<double>(range.lo + a),
                            x2 - alpha * static_cast<double>(range.lo + b));
            for (std::int64_t l1 = 0; l1 < s; ++l1) {
                for (std::int64_t b = 0; b < mc; ++b) {
                    Quaternion acc{};
                    for (std::int64_t a = 0; a < mc; ++a)
                        acc += mul(fvals[static_cast<std::size_t>(a * mc + b)],
                                   itab[static_cast<std::size_t>(a * s + l1)]);
                    t[static_cast<std::size_t>(b)] = acc;
                }
                for (std::int64_t l2 = 0; l2 < s; ++l2) {
                    Quaternion acc{};
                    for (std::int64_t b = 0; b < mc; ++b)
                        acc += mul(jtab[static_cast<std::size_t>(b * s + l2)],
                                   t[static_cast<std::size_t>(b)]);
                    const double mod2 = norm_sq(acc);
                    const double w1 = static_cast<double>(l1) / (alpha * static_cast<double>(s));
                    const double w2 = static_cast<double>(l2) / (alpha * static_cast<double>(s));
                    if (!row.seen || mod2 < row.lo) {
                        row.lo = mod2;
                        row.lo_at = {x1, x2, w1, w2};
                    }
                    if (!row.seen || mod2 > row.hi) {
                        row.hi = mod2;
                        row.hi_at = {x1, x2, w1, w2};
                    }
                    row.seen = true;
                }
            }
        }
    });

    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (const RowExtrema& row : rows) {  // fixed order: thread count cannot change the result
        if (!row.seen) continue;
        if (first || row.lo < lo) {
            lo = row.lo;
            level.min_location = row.lo_at;
        }
        if (first || row.hi > hi) {
            hi = row.hi;
            level.max_location = row.hi_at;
        }
        first = false;
    }
    level.A = alpha * alpha * lo;
    level.B = alpha * alpha * hi;
    return level;
}

}  // namespace

ZakFrameBounds optimal_frame_bounds(const WindowSpec& g, double alpha, std::int64_t r,
                                    std::int64_t s, std::int64_t trunc,
                                    std::int64_t refine_steps) {
    if (!(alpha > 0.0)) throw std::invalid_argument("optimal_frame_bounds: alpha must be positive");
    ZakFrameBounds out;
    out.alpha = alpha;
    out.window = window_kind_name(g.kind);
    const WindowSpec gc = certification_window(g, &out.window_normalized);

    ZakBoundsLevel level = sweep_level(gc, alpha, r, s, trunc);
    out.levels.push_back(level);
    for (std::int64_t step = 0; step < refine_steps; ++step) {
        const ZakBoundsLevel next = sweep_level(gc, alpha, level.r * 2, level.s * 2, trunc);
        const double change = std::max(std::abs(next.A - level.A), std::abs(next.B - level.B));
        out.levels.push_back(next);
        level = next;
        if (change < 1e-4) break;
    }
    out.A = level.A;
    out.B = level.B;
    return out;
}

GaussianZeroReport gaussian_zak_critical_value(double alpha, std::int64_t trunc) {
    if (!(alpha > 0.0) || trunc < 1)
        throw std::invalid_argument("gaussian_zak_critical_value: need alpha > 0, trunc >= 1");
    GaussianZeroReport rep;
    rep.alpha = alpha;
    rep.trunc = trunc;
    const MRange range = pair_complete_range(trunc);
    rep.range_lo = range.lo;
    rep.range_hi = range.hi;

    rep.value = zak_point(ZakSource::analytic({WindowKind::Gaussian, 1.0}), alpha, alpha / 2.0,
                          alpha / 2.0, 1.0 / (2.0 * alpha), 1.0 / (2.0 * alpha), range);

    // per-axis pairing m <-> 1-m with exact angle reduction: the phase
    // 2 pi alpha m w at w = 1/(2 alpha) is pi m, i.e. 0 or pi mod 2 pi
    rep.paired_cancellation = true;
    for (std::int64_t m = 1; m <= trunc + 1; ++m) {
        auto term = [&](std::int64_t mm) {
            const double y = alpha / 2.0 - alpha * static_cast<double>(mm);
            const double frac = (mm % 2 == 0) ? 0.0 : 0.5;  // (m/2) mod 1
            const Quaternion phase = exp_i(kTwoPi * frac);
            return mul(Quaternion::real(std::exp(-3.1415926535897932384626433832795 * y * y)),
                       phase);
        };
        const double defect = abs(term(m) + term(1 - m));
        rep.max_pair_defect = std::max(rep.max_pair_defect, defect);
        if (defect > 1e-15) rep.paired_cancellation = false;
    }
    return rep;
}

GaussianZeroReport gaussian_zak_critical_value_pair_broken(double alpha, std::int64_t trunc) {
    GaussianZeroReport rep;
    rep.alpha = alpha;
    rep.trunc = trunc;
    std::vector<std::int64_t> idx;
    for (std::int64_t m = -trunc; m <= trunc; ++m)
        if (m != -1) idx.push_back(m);
    rep.range_lo = -trunc;
    rep.range_hi = trunc;
    rep.value = zak_point_list(ZakSource::analytic({WindowKind::Gaussian, 1.0}), alpha,
                               alpha / 2.0, alpha / 2.0, 1.0 / (2.0 * alpha),
                               1.0 / (2.0 * alpha), idx, idx);
    rep.paired_cancellation = false;
    return rep;
}

FrameDecision frame_decision(const WindowSpec& g, double alpha,
                             const DecisionThresholds& thresholds, std::int64_t base_r,
                             std::int64_t base_s, std::int64_t trunc,
                             std::int64_t refinements) {
    FrameDecision d;
    d.thresholds = thresholds;
    d.bounds = optimal_frame_bounds(g, alpha, base_r, base_s, trunc, 0);
    for (std::int64_t k = 1; k <= refinements; ++k) {
        const ZakFrameBounds finer =
            optimal_frame_bounds(g, alpha, base_r << k, base_s << k, trunc, 0);
        d.bounds.levels.push_back(finer.levels.front());
    }
    const ZakBoundsLevel& finest = d.bounds.levels.back();
    d.A = d.bounds.A = finest.A;
    d.B = d.bounds.B = finest.B;

    if (g.kind == WindowKind::Gaussian) {
        d.zero_report = gaussian_zak_critical_value(alpha, trunc);
        d.analytic_zero_certificate =
            abs(d.zero_report.value) <= 1e-13 && d.zero_report.paired_cancellation;
    }

    const std::size_t n = d.bounds.levels.size();
    const double a_prev = n >= 2 ? d.bounds.levels[n - 2].A : finest.A;
    const bool a_shrinking = finest.A <= a_prev + 1e-15;
    const bool a_stable =
        std::abs(finest.A - a_prev) <= thresholds.stable_rel * std::max(finest.A, 1e-300);

    if (d.analytic_zero_certificate) {
        d.verdict = "not_frame";
    } else if (std::abs(finest.A - 1.0) <= thresholds.onb_tol &&
               std::abs(finest.B - 1.0) <= thresholds.onb_tol) {
        d.verdict = "onb";
    } else if (finest.A < thresholds.zero_A && a_shrinking) {
        d.verdict = "not_frame";
    } else if (finest.A >= thresholds.frame_min_A && a_stable) {
        d.verdict = "frame";
    } else {
        d.verdict = "inconclusive";
    }
    return d;
}

ContinuityReport continuity_modulus_probe(const WindowSpec& g, double alpha, double delta,
                                          std::int64_t samples, std::uint64_t seed,
                                          std::int64_t trunc) {
    if (delta < 0.0) throw std::invalid_argument("continuity_modulus_probe: delta must be >= 0");
    const ZakSource src = ZakSource::analytic(g);
    const MRange range = symmetric_range(trunc);
    const double pool_scale = 0.25;  // fixed, so smaller delta filters a subset

    SeededRng rng(seed);
    ContinuityReport rep;
    for (std::int64_t k = 0; k < samples; ++k) {
        double p[4];
        for (double& c : p) c = rng.uniform();
        double dir[4];
        double nrm = 0.0;
        for (double& c : dir) {
            c = rng.normal();
            nrm += c * c;
        }
        nrm = std::sqrt(nrm);
        const double sep = pool_scale * rng.uniform();
        if (sep > delta || nrm == 0.0) continue;

        const double x1 = p[0] * alpha, x2 = p[1] * alpha;
        const double w1 = p[2] / alpha, w2 = p[3] / alpha;
        const Quaternion za = zak_point(src, alpha, x1, x2, w1, w2, range);
        const Quaternion zb =
            zak_point(src, alpha, x1 + sep * dir[0] / nrm, x2 + sep * dir[1] / nrm,
                      w1 + sep * dir[2] / nrm, w2 + sep * dir[3] / nrm, range);
        rep.max_variation = std::max(rep.max_variation, abs(za - zb));
        ++rep.pairs_used;
    }
    return rep;
}

}  // namespace qgabor
