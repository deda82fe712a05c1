#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgabor/qft.hpp"
#include "qgabor/window.hpp"
#include "qgabor/wqft.hpp"
#include "test_util.hpp"

using namespace qgabor;

namespace {
const WindowSpec kGauss{WindowKind::Gaussian, 1.0};
}

TEST_CASE("fast path matches the direct sandwiched sum") {
    const Grid2 g = make_square_grid(16, -4.0, 4.0);
    const QField win = sample_window(kGauss, g);
    testutil::Rng rng(211);
    const QField f = testutil::random_field(g, rng);

    const WqftCoefficients qc = wqft(f, win);
    for (const auto& [iu, iv] : {std::pair<int, int>{0, 0}, {3, 7}, {9, 2}, {15, 15}}) {
        for (const auto& [ib1, ib2] : {std::pair<int, int>{0, 0}, {5, 11}, {12, 3}}) {
            const Quaternion direct =
                wqft_point_direct(f, win, qc.b1[ib1], qc.b2[ib2],
                                  static_cast<double>(qc.w1_bins[iu]) * qc.padded_reciprocal.dx1,
                                  static_cast<double>(qc.w2_bins[iv]) * qc.padded_reciprocal.dx2);
            CHECK(abs(qc.at(ib1, ib2, iu, iv) - direct) <= 1e-10);
        }
    }
}

TEST_CASE("value at the origin is the window energy") {
    const Grid2 g = make_square_grid(64, -6.0, 6.0);
    const QField win = sample_window(kGauss, g);
    const Quaternion q00 = wqft_point_direct(win, win, 0.0, 0.0, 0.0, 0.0);
    CHECK(q00.w == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(std::abs(q00.x) + std::abs(q00.y) + std::abs(q00.z) <= 1e-12);
}

TEST_CASE("disjoint translates give zero coefficients") {
    const Grid2 g = make_square_grid(32, 0.0, 4.0);
    const QField box = sample_window(WindowSpec{WindowKind::Box, 1.0}, g);
    const QField f = translate(box, 2.0, 0.0);
    for (double w : {0.0, 0.25, 1.0})
        CHECK(abs(wqft_point_direct(f, box, 0.0, 0.0, w, -w)) <= 1e-10);
}

TEST_CASE("inner-product form: equal for real signals, carrier-sensitive otherwise") {
    const Grid2 g = make_square_grid(24, -3.0, 3.0);
    const QField win = sample_window(kGauss, g);
    testutil::Rng rng(223);

    const QField freal = testutil::random_real_field(g, rng);
    const double b1 = 0.5, b2 = -0.25, w1 = 0.75, w2 = 1.5;
    CHECK(abs(wqft_point_direct(freal, win, b1, b2, w1, w2) -
              wqft_inner_form(freal, win, b1, b2, w1, w2)) <= 1e-10);

    // for a j-valued signal the materialized form differs: the i-kernel has
    // to pass through f, which conjugates it
    const QField fj = scale_left(freal, Quaternion{0, 0, 1, 0});
    const Quaternion sandwiched = wqft_point_direct(fj, win, b1, b2, w1, w2);
    const Quaternion materialized = wqft_inner_form(fj, win, b1, b2, w1, w2);
    CHECK(abs(sandwiched - materialized) > 1e-6);
}

TEST_CASE("coefficients are Cauchy-Schwarz bounded") {
    const Grid2 g = make_square_grid(32, -4.0, 4.0);
    const QField win = sample_window(kGauss, g);
    testutil::Rng rng(227);
    const QField f = testutil::smooth_random_field(g, rng, 1.0);
    const WqftCoefficients qc = wqft(f, win);
    const double bound = std::sqrt(norm_sq(f)) * std::sqrt(norm_sq(win));
    for (const auto& q : qc.values) CHECK(abs(q) <= bound * (1.0 + 1e-10));
}

TEST_CASE("reconstruction from dense phase-space samples") {
    const Grid2 g = make_square_grid(32, -4.0, 4.0);
    const QField win = sample_window(kGauss, g);
    const QField f = sample_window(kGauss, g);

    WqftOptions desk;
    desk.b_stride = 2;
    desk.w_stride = 2;
    const QField rec = wqft_reconstruct(wqft(f, win, desk), win);
    const double rel = std::sqrt(norm_sq(sub(rec, f)) / norm_sq(f));
    CHECK(rel <= 1e-2);

    WqftOptions fine;
    const QField rec2 = wqft_reconstruct(wqft(f, win, fine), win);
    const double rel2 = std::sqrt(norm_sq(sub(rec2, f)) / norm_sq(f));
    CHECK(rel2 <= rel + 1e-12);

    const QField zero(g);
    CHECK(max_abs(wqft_reconstruct(wqft(zero, win, desk), win)) == 0.0);
}

TEST_CASE("orthogonality relation") {
    const Grid2 g = make_square_grid(64, -8.0, 8.0);
    const QField win = sample_window(kGauss, g);
    const QField f = sample_window(kGauss, g);
    const QField h = add(translate(f, 1.0, -0.5), scale(modulate(f, 0.5, 0.25), 0.7));

    WqftOptions desk;
    desk.b_stride = 2;
    desk.w_stride = 4;
    desk.w_max = 2.5;
    const OrthogonalityReport r1 = orthogonality_check(f, h, win, desk);
    CHECK(r1.rel_err <= 1e-2);

    WqftOptions fine;
    fine.b_stride = 1;
    fine.w_stride = 2;
    fine.w_max = 2.5;
    const OrthogonalityReport r2 = orthogonality_check(f, h, win, fine);
    CHECK(r2.rel_err < r1.rel_err);

    // rhs = 0 pair: i-scaled copy is Sc-orthogonal to the original
    const QField fi = scale_left(f, Quaternion{0, 1, 0, 0});
    const OrthogonalityReport r0 = orthogonality_check(f, fi, win, desk);
    CHECK(std::abs(r0.rhs) <= 1e-12);
    CHECK(std::abs(r0.lhs) <=
          1e-3 * std::sqrt(norm_sq(f)) * std::sqrt(norm_sq(fi)) * norm_sq(win));

    const OrthogonalityReport rself = orthogonality_check(f, f, win, desk);
    CHECK(rself.lhs > 0.0);
}

TEST_CASE("covariance under translation and conjugate modulation") {
    const Grid2 g = make_square_grid(32, -4.0, 4.0);
    const QField win = sample_window(kGauss, g);
    testutil::Rng rng(229);
    const QField f = testutil::smooth_random_field(g, rng, 1.0);

    const CovarianceReport id = covariance_check(f, win, 0.0, 0.0, 0.0, 0.0);
    CHECK(id.max_defect_translation <= 1e-12);
    CHECK(id.max_defect_modulation <= 1e-12);

    const QField gf = sample_window(kGauss, g);
    const CovarianceReport tr = covariance_check(gf, win, 1.0, 0.0, 0.0, 0.0);
    CHECK(tr.max_defect_translation <= 1e-9);

    const CovarianceReport md = covariance_check(gf, win, 0.0, 0.0, 0.5, 0.5);
    CHECK(md.max_defect_modulation <= 1e-9);

    CHECK_THROWS(covariance_check(f, win, 0.1234, 0.0, 0.0, 0.0));
}

TEST_CASE("memory guard rejects oversized materialization") {
    const Grid2 g = make_square_grid(32, -4.0, 4.0);
    const QField win = sample_window(kGauss, g);
    WqftOptions opts;
    opts.memory_guard_bytes = 1024;
    CHECK_THROWS_AS((void)wqft(QField(g), win, opts), std::length_error);
}
