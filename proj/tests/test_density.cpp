#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include "qgabor/parallel.hpp"

#include "qgabor/density.hpp"
#include "test_util.hpp"

using namespace qgabor;

namespace {
const WindowSpec kGauss{WindowKind::Gaussian, 1.0};
}

TEST_CASE("optimal bounds: normalized box is tight at 1 for any alpha") {
    for (const double alpha : {0.5, 1.0, 2.0}) {
        const WindowSpec box{WindowKind::Box, alpha};
        const ZakFrameBounds b = optimal_frame_bounds(box, alpha, 8, 8, 3);
        CHECK(b.window_normalized);
        CHECK(std::abs(b.A - 1.0) <= 1e-12);
        CHECK(std::abs(b.B - 1.0) <= 1e-12);
    }
}

TEST_CASE("optimal bounds: gaussian hits its Zak zero and the theta supremum") {
    const ZakFrameBounds b = optimal_frame_bounds(kGauss, 1.0, 8, 8, 10);
    CHECK_FALSE(b.window_normalized);
    CHECK(b.A <= 1e-12);  // the grid contains (1/2, 1/2, 1/2, 1/2)
    const double oracle = testutil::gauss_upper_bound_theta_oracle(256);
    CHECK(oracle == doctest::Approx(1.3932).epsilon(1e-3));
    CHECK(std::abs(b.B - oracle) <= 1e-3);
}

TEST_CASE("refinement nests the extrema") {
    const ZakFrameBounds b = optimal_frame_bounds(WindowSpec{WindowKind::Hat, 1.0}, 1.0, 4, 4, 4, 3);
    for (std::size_t k = 1; k < b.levels.size(); ++k) {
        CHECK(b.levels[k].A <= b.levels[k - 1].A + 1e-15);
        CHECK(b.levels[k].B >= b.levels[k - 1].B - 1e-15);
    }
}

TEST_CASE("frame decisions") {
    for (const double alpha : {0.5, 1.0, 2.0}) {
        const FrameDecision d = frame_decision(WindowSpec{WindowKind::Box, alpha}, alpha);
        CHECK(d.verdict == "onb");
    }
    const FrameDecision dg = frame_decision(kGauss, 1.0);
    CHECK(dg.verdict == "not_frame");
    CHECK(dg.analytic_zero_certificate);

    // hat at critical density has a Zak zero as well; the verdict must be
    // reproducible across different base grids
    const FrameDecision h1 = frame_decision(WindowSpec{WindowKind::Hat, 1.0}, 1.0, {}, 8, 8, 6, 2);
    const FrameDecision h2 = frame_decision(WindowSpec{WindowKind::Hat, 1.0}, 1.0, {}, 12, 12, 6, 2);
    CHECK(h1.verdict == h2.verdict);
    CHECK(h1.verdict == "not_frame");

    CHECK_THROWS(frame_decision(kGauss, -1.0));
}

TEST_CASE("gaussian critical value certificate") {
    for (const double alpha : {0.5, 1.0, 2.0}) {
        const GaussianZeroReport rep = gaussian_zak_critical_value(alpha, 8);
        CHECK(abs(rep.value) <= 1e-13);
        CHECK(rep.paired_cancellation);
        CHECK(rep.max_pair_defect <= 1e-15);
    }
    // deliberately pair-broken truncation leaves the orphaned terms standing
    const GaussianZeroReport broken = gaussian_zak_critical_value_pair_broken(1.0, 8);
    CHECK(abs(broken.value) > 1e-8);
    CHECK_FALSE(broken.paired_cancellation);

    CHECK_THROWS(gaussian_zak_critical_value(1.0, 0));
}

TEST_CASE("sweeps are independent of the thread count") {
    set_max_threads(4);
    const ZakFrameBounds b4 = optimal_frame_bounds(kGauss, 1.0, 16, 16, 10);
    set_max_threads(1);
    const ZakFrameBounds b1 = optimal_frame_bounds(kGauss, 1.0, 16, 16, 10);
    set_max_threads(0);
    CHECK(b4.A == b1.A);
    CHECK(b4.B == b1.B);
    CHECK(b4.levels.front().min_location == b1.levels.front().min_location);
}

TEST_CASE("continuity modulus probe") {
    const ContinuityReport at3 = continuity_modulus_probe(kGauss, 1.0, 1e-3, 4000);
    CHECK(at3.max_variation <= 0.05);
    CHECK(at3.pairs_used > 0);

    const ContinuityReport at0 = continuity_modulus_probe(kGauss, 1.0, 0.0, 4000);
    CHECK(at0.max_variation == 0.0);

    // same pool, smaller budget: subset of pairs, max cannot grow
    const ContinuityReport half = continuity_modulus_probe(kGauss, 1.0, 0.5e-3, 4000);
    CHECK(half.max_variation <= at3.max_variation + 1e-18);

    CHECK_THROWS(continuity_modulus_probe(kGauss, 1.0, -0.5, 100));
}
