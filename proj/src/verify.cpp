#include "qgabor/verify.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <sstream>

#include "qgabor/density.hpp"
#include "qgabor/gabor.hpp"
#include "qgabor/qft.hpp"
#include "qgabor/rng.hpp"
#include "qgabor/window.hpp"
#include "qgabor/wqft.hpp"
#include "qgabor/zak.hpp"

namespace qgabor {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kTwoPi = 6.283185307179586476925286766559;

QField random_field(const Grid2& g, SeededRng& rng) {
    QField f(g);
    for (auto& q : f.data()) q = rng.quaternion();
    return f;
}

std::complex<double> zak_1d(const WindowSpec& spec, double alpha, double t, double v,
                            std::int64_t trunc) {
    std::complex<double> acc{0.0, 0.0};
    for (std::int64_t m = -trunc; m <= trunc; ++m) {
        const double ang = kTwoPi * alpha * static_cast<double>(m) * v;
        acc += window_value_1d(spec, t - alpha * static_cast<double>(m)) *
               std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

}  // namespace

VerifyReport run_verify_suite(std::uint64_t seed) {
    VerifyReport report;
    report.seed = seed;
    SeededRng rng(seed);
    auto add = [&](const std::string& name, double defect, double tol) {
        VerifyLine line;
        line.name = name;
        line.defect = defect;
        line.tolerance = tol;
        line.pass = defect <= tol;
        report.all_pass = report.all_pass && line.pass;
        report.lines.push_back(line);
    };

    // --- quaternion algebra -------------------------------------------------
    {
        double d_cyc = 0.0, d_mod = 0.0, d_car = 0.0;
        for (int t = 0; t < 10000; ++t) {
            const Quaternion p = rng.quaternion(), q = rng.quaternion(), r = rng.quaternion();
            const double pqr = scalar_part(mul(mul(p, q), r));
            d_cyc = std::max(d_cyc, std::abs(pqr - scalar_part(mul(mul(q, r), p))));
            d_cyc = std::max(d_cyc, std::abs(pqr - scalar_part(mul(mul(r, p), q))));
            d_mod = std::max(d_mod, std::abs(abs(mul(p, q)) - abs(p) * abs(q)));
            d_car = std::max(d_car, abs(carrier_apply(CarrierSide::Right, p, Quaternion::one()) - p));
            d_car = std::max(d_car,
                             abs(conj(carrier_apply(CarrierSide::Right, p, conj(q))) -
                                 carrier_apply(CarrierSide::Left, conj(p), q)));
        }
        add("cyclic-scalar-identity", d_cyc, 1e-12);
        add("modulus-multiplicativity", d_mod, 1e-12);
        add("carrier-identities", d_car, 1e-14);
    }

    // --- operators on fields -------------------------------------------------
    const Grid2 g32 = make_square_grid(32, -4.0, 4.0);
    const QField gauss32 = sample_window(WindowSpec{WindowKind::Gaussian, 1.0}, g32);
    {
        // b grid-aligned and w on the reciprocal lattice keep the periodic
        // model exact, so the identity holds to rounding
        double d = 0.0;
        const double dw = 1.0 / g32.len1();
        for (int t = 0; t < 6; ++t) {
            const double b1 = g32.dx1 * std::floor(rng.uniform(-12.0, 12.0));
            const double b2 = g32.dx2 * std::floor(rng.uniform(-12.0, 12.0));
            const double w1 = dw * std::floor(rng.uniform(-16.0, 16.0));
            const double w2 = dw * std::floor(rng.uniform(-16.0, 16.0));
            const CommutationReport rep = commutation_check(gauss32, b1, b2, w1, w2);
            d = std::max(d, rep.twisted_defect);
        }
        add("twisted-commutation", d, 1e-12);
    }

    // --- QFT ------------------------------------------------------------------
    {
        const QField f = random_field(g32, rng);
        const QField back = qft_inverse(qft_forward(f), g32.x1_min, g32.x2_min);
        add("qft-inversion", max_abs_diff(back, f), 1e-12);
        add("qft-parseval", std::abs(norm_sq(qft_forward(f)) / norm_sq(f) - 1.0), 1e-10);
    }
    {
        const Grid2 g256 = make_square_grid(256, -6.0, 6.0);
        const QField w = sample_window(WindowSpec{WindowKind::Gaussian, 1.0}, g256);
        const UncertaintyReport rep = uncertainty(w);
        const double d = std::max(std::abs(rep.products[0] - rep.bound),
                                  std::abs(rep.products[1] - rep.bound));
        add("heisenberg-gaussian-equality", d, 1e-6);

        double worst = 0.0;  // largest bound violation over non-gaussian probes
        const QField hat = sample_window(WindowSpec{WindowKind::Hat, 1.0}, g256);
        const QField flat = map_field(g256, [](double x1, double x2) {
            const double r2 = x1 * x1 + x2 * x2;
            return Quaternion::real(std::exp(-3.1415926535897932384626433832795 * r2 * r2));
        });
        const QField modulated = modulate(w, 1.0, 1.0);
        const QField hermite = map_field(g256, [](double x1, double x2) {
            return Quaternion::real(x1 * std::exp(-kPi * (x1 * x1 + x2 * x2)));
        });
        const QField pair = qgabor::add(w, translate(w, 1.5, -1.5));
        for (const QField* p : {&hat, &flat, &modulated, &hermite, &pair}) {
            const UncertaintyReport r = uncertainty(*p);
            worst = std::max(worst, std::max(rep.bound - r.products[0], rep.bound - r.products[1]));
        }
        add("heisenberg-lower-bound-probes", worst, 1e-6);
    }

    // --- WQFT ------------------------------------------------------------------
    {
        QField freal(g32);
        for (auto& q : freal.data()) q = Quaternion::real(rng.normal());
        const QField f = low_pass_roundtrip(freal, 1.0);
        double d = 0.0;
        for (int t = 0; t < 4; ++t) {
            const double b1 = g32.dx1 * std::floor(rng.uniform(-8.0, 8.0));
            const double b2 = g32.dx2 * std::floor(rng.uniform(-8.0, 8.0));
            const double w1 = rng.uniform(-1.5, 1.5), w2 = rng.uniform(-1.5, 1.5);
            d = std::max(d, abs(wqft_point_direct(f, gauss32, b1, b2, w1, w2) -
                                wqft_inner_form(f, gauss32, b1, b2, w1, w2)));
        }
        add("wqft-inner-product-form", d, 1e-10);
    }
    {
        WqftOptions desk;
        desk.b_stride = 2;
        desk.w_stride = 2;
        const QField f = sample_window(WindowSpec{WindowKind::Gaussian, 1.0}, g32);
        const QField rec = wqft_reconstruct(wqft(f, gauss32, desk), gauss32);
        add("wqft-reconstruction", std::sqrt(norm_sq(sub(rec, f)) / norm_sq(f)), 1e-2);

        const QField h = qgabor::add(translate(f, 1.0, -0.5), scale(modulate(f, 0.5, 0.25), 0.7));
        WqftOptions orth;
        orth.b_stride = 2;
        orth.w_stride = 4;
        orth.w_max = 2.5;
        add("wqft-orthogonality", orthogonality_check(f, h, gauss32, orth).rel_err, 1e-2);

        const CovarianceReport cov = covariance_check(f, gauss32, 1.0, 0.0, 0.5, 0.5);
        add("wqft-covariance-translation", cov.max_defect_translation, 1e-9);
        add("wqft-covariance-modulation", cov.max_defect_modulation, 1e-9);
    }

    // --- Zak transform -----------------------------------------------------------
    const WindowSpec gauss_spec{WindowKind::Gaussian, 1.0};
    const WindowSpec box_spec{WindowKind::Box, 1.0};
    {
        double worst = 0.0;
        for (const double alpha : {0.5, 1.0, 2.0}) {
            const ZakField z = zak_grid(ZakSource::analytic(gauss_spec), alpha, 12, 12, 12, 12,
                                        symmetric_range(10));
            const double ratio = alpha * alpha * zak_inner_sc(z, z) / 0.5;
            worst = std::max(worst, std::abs(ratio - 1.0));
        }
        add("zak-unitarity-gaussian", worst, 1e-3);

        const ZakField zb =
            zak_grid(ZakSource::analytic(box_spec), 1.0, 8, 8, 8, 8, symmetric_range(3));
        add("zak-unitarity-box", std::abs(zak_inner_sc(zb, zb) - 1.0), 1e-10);
    }
    {
        double d = 0.0;
        const ZakSource src = ZakSource::analytic(gauss_spec);
        for (int t = 0; t < 100; ++t) {
            const QuasiperiodicityReport rep = quasiperiodicity_check(
                src, 1.0, rng.uniform(), rng.uniform(), rng.uniform(), rng.uniform(), 10);
            d = std::max(d, std::max(rep.defect_w, rep.defect_x));
        }
        add("zak-quasiperiodicity", d, 1e-10);
    }
    {
        const ZakField z = zak_grid(ZakSource::analytic(gauss_spec), 1.0, 8, 8, 16, 16,
                                    symmetric_range(10));
        const QField rec = zak_inverse(z);
        double d = 0.0;
        for (std::int64_t a = 0; a < rec.n1(); ++a)
            for (std::int64_t b = 0; b < rec.n2(); ++b)
                d = std::max(d, abs(rec.at(a, b) -
                                    Quaternion::real(window_value(
                                        gauss_spec, rec.grid().x1(a), rec.grid().x2(b)))));
        add("zak-inversion", d, 1e-8);
    }
    {
        double d = 0.0;
        const ZakSource src = ZakSource::analytic(gauss_spec);
        for (int t = 0; t < 6; ++t) {
            const std::int64_t k1 = static_cast<std::int64_t>(std::floor(rng.uniform(-2.0, 3.0)));
            const std::int64_t k2 = static_cast<std::int64_t>(std::floor(rng.uniform(-2.0, 3.0)));
            const std::int64_t n1 = static_cast<std::int64_t>(std::floor(rng.uniform(-2.0, 3.0)));
            const std::int64_t n2 = static_cast<std::int64_t>(std::floor(rng.uniform(-2.0, 3.0)));
            const double x1 = rng.uniform(), x2 = rng.uniform();
            const double w1 = rng.uniform(), w2 = rng.uniform();
            const Quaternion closed =
                zak_mt_window(src, 1.0, k1, k2, n1, n2, x1, x2, w1, w2, symmetric_range(12));
            const ZakSource mt = ZakSource::functor([=](double y1, double y2) {
                const Quaternion val = Quaternion::real(
                    window_value(gauss_spec, y1 - static_cast<double>(n1), y2 - static_cast<double>(n2)));
                return mul(mul(exp_j(kTwoPi * static_cast<double>(k2) * y2), val),
                           exp_i(kTwoPi * static_cast<double>(k1) * y1));
            });
            const Quaternion direct = zak_point(mt, 1.0, x1, x2, w1, w2, symmetric_range(12));
            d = std::max(d, abs(closed - direct));
        }
        add("zak-mt-window-identity", d, 1e-10);
    }
    {
        // separable factorization |Z g| = |Z1 g1| |Z1 g2|
        double d = 0.0;
        const ZakSource src = ZakSource::analytic(gauss_spec);
        for (int t = 0; t < 20; ++t) {
            const double x1 = rng.uniform(), x2 = rng.uniform();
            const double w1 = rng.uniform(), w2 = rng.uniform();
            const Quaternion z = zak_point(src, 1.0, x1, x2, w1, w2, symmetric_range(10));
            const double prod = std::abs(zak_1d(gauss_spec, 1.0, x1, w1, 10)) *
                                std::abs(zak_1d(gauss_spec, 1.0, x2, w2, 10));
            d = std::max(d, std::abs(abs(z) - prod));
        }
        add("zak-separable-modulus", d, 1e-12);
    }

    // --- lattice sum identity and density results --------------------------------
    {
        const Grid2 unit = make_square_grid(32, 0.0, 1.0);
        const QField box = sample_window(box_spec, unit);
        const SumIdentityReport rep = sum_identity_check(box, box, 1.0, 8, 8, 2, 4);
        add("sum-identity-box", std::max(std::abs(rep.lhs - 1.0), std::abs(rep.rhs - 1.0)), 1e-6);
    }
    {
        const Grid2 dom = make_square_grid(64, -4.0, 4.0);
        const QField w = sample_window(gauss_spec, dom);
        const SumIdentityReport rep = sum_identity_check(w, w, 1.0, 8, 12, 10, 3);
        add("sum-identity-gaussian", rep.rel_err, 1e-2);
    }
    {
        double d = 0.0;
        for (const double alpha : {0.5, 1.0, 2.0}) {
            const WindowSpec box_alpha{WindowKind::Box, alpha};
            const ZakFrameBounds b = optimal_frame_bounds(box_alpha, alpha, 8, 8, 3);
            d = std::max(d, std::max(std::abs(b.A - 1.0), std::abs(b.B - 1.0)));
        }
        add("optimal-bounds-box-onb", d, 1e-12);
    }
    {
        const Grid2 unit = make_square_grid(32, 0.0, 1.0);
        const QField box = sample_window(box_spec, unit);
        const GaborSystem sys = make_gabor_system(box, 1.0, 1.0, 15);
        const QField f = low_pass_roundtrip(random_field(unit, rng), 11.0);
        const QField sf = frame_apply(f, sys);
        add("box-frame-operator-identity", max_abs_diff(sf, f), 1e-6);
    }
    {
        double dval = 0.0;
        bool paired = true;
        for (const double alpha : {0.5, 1.0, 2.0}) {
            const GaussianZeroReport rep = gaussian_zak_critical_value(alpha, 8);
            dval = std::max(dval, abs(rep.value));
            paired = paired && rep.paired_cancellation;
        }
        add("gaussian-zero-certificate", paired ? dval : 1.0, 1e-13);
        const GaussianZeroReport broken = gaussian_zak_critical_value_pair_broken(1.0, 8);
        add("gaussian-zero-negative-control", abs(broken.value) > 1e-8 ? 0.0 : 1.0, 0.5);
    }
    {
        // upper bound against the 1-D theta-sum sup (grid search)
        double sup2 = 0.0;
        for (int a = 0; a < 128; ++a)
            for (int b = 0; b < 128; ++b)
                sup2 = std::max(sup2, std::norm(zak_1d(gauss_spec, 1.0, a / 128.0, b / 128.0, 10)));
        const double oracle = sup2 * sup2;
        const ZakFrameBounds bounds = optimal_frame_bounds(gauss_spec, 1.0, 16, 16, 10);
        add("gaussian-upper-bound-theta", std::abs(bounds.B - oracle), 1e-3);
    }
    {
        // empirical Rayleigh bounds sit inside the certified interval
        const Grid2 unit = make_square_grid(32, 0.0, 1.0);
        const QField box = sample_window(box_spec, unit);
        const GaborSystem bsys = make_gabor_system(box, 1.0, 1.0, 15);
        const FrameBoundsEstimate be = empirical_frame_bounds(bsys, 3, seed);
        double d = std::max(1.0 - 1e-3 - be.A, be.B - (1.0 + 1e-3));

        const Grid2 dom = make_square_grid(64, -4.0, 4.0);
        const QField w = sample_window(gauss_spec, dom);
        const GaborSystem gsys = make_gabor_system(w, 1.0, 1.0, 3);
        const FrameBoundsEstimate ge = empirical_frame_bounds(gsys, 3, seed + 1);
        const ZakFrameBounds gb = optimal_frame_bounds(gauss_spec, 1.0, 16, 16, 10);
        d = std::max(d, std::max(gb.A - 1e-3 - ge.A, ge.B - (gb.B + 1e-3)));
        add("empirical-bounds-containment", std::max(d, 0.0), 1e-12);
    }
    {
        const ContinuityReport rep = continuity_modulus_probe(gauss_spec, 1.0, 1e-3, 4000, seed);
        add("zak-continuity-probe", rep.max_variation, 0.05);
    }

    return report;
}

std::string format_verify_table(const VerifyReport& report) {
    std::ostringstream os;
    os << "verify seed=" << report.seed << "\n";
    for (const VerifyLine& line : report.lines) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%-34s defect=%.6e tol=%.1e %s\n", line.name.c_str(),
                      line.defect, line.tolerance, line.pass ? "PASS" : "FAIL");
        os << buf;
    }
    os << (report.all_pass ? "all checks passed\n" : "FAILURES PRESENT\n");
    return os.str();
}

}  // namespace qgabor
