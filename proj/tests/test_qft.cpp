#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "qgabor/qft.hpp"
#include "qgabor/qft_oracle.hpp"
#include "qgabor/window.hpp"
#include "test_util.hpp"

using namespace qgabor;

TEST_CASE("constant field transforms to an impulse at DC") {
    const Grid2 g = make_square_grid(32, -4.0, 4.0);
    QField ones(g);
    for (auto& q : ones.data()) q = Quaternion::one();
    const QField F = qft_forward(ones);
    CHECK(F.at(0, 0).w == doctest::Approx(g.len1() * g.len2()).epsilon(1e-12));
    double off = 0.0;
    for (std::int64_t u = 0; u < g.n1; ++u)
        for (std::int64_t v = 0; v < g.n2; ++v)
            if (u || v) off = std::max(off, abs(F.at(u, v)));
    CHECK(off <= 1e-10 * g.len1() * g.len2());
}

TEST_CASE("delta-like field has flat modulus") {
    const Grid2 g = make_square_grid(16, -2.0, 2.0);
    QField f(g);
    f.at(g.n1 / 2, g.n2 / 2) = Quaternion::real(1.0 / g.cell_area());
    const QField F = qft_forward(f);
    for (const auto& q : F.data()) CHECK(abs(q) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("gaussian transforms to the gaussian spectrum") {
    const Grid2 g = make_square_grid(256, -6.0, 6.0);
    const QField w = sample_window(WindowSpec{WindowKind::Gaussian, 1.0}, g);
    const QField F = qft_forward(w);
    const Grid2& rg = F.grid();
    // compare on a subset against the separable 1-D quadrature oracle
    for (std::int64_t u = 0; u < rg.n1; u += 37) {
        for (std::int64_t v = 0; v < rg.n2; v += 41) {
            const double w1 = wrapped_freq(u, rg.n1, rg.dx1);
            const double w2 = wrapped_freq(v, rg.n2, rg.dx2);
            const std::complex<double> s1 = testutil::gauss_spectrum_1d(w1);
            const std::complex<double> s2 = testutil::gauss_spectrum_1d(w2);
            // product of an i-plane and a j-plane complex number
            const Quaternion expect = mul(Quaternion{s1.real(), s1.imag(), 0, 0},
                                          Quaternion{s2.real(), 0, s2.imag(), 0});
            CHECK(abs(F.at(u, v) - expect) <= 1e-8);
        }
    }
    // the spectrum of exp(-pi |x|^2) is exp(-pi |w|^2)
    CHECK(F.at(0, 0).w == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("round trip is the identity") {
    testutil::Rng rng(101);
    const Grid2 g = make_square_grid(64, -6.0, 6.0);
    for (int t = 0; t < 5; ++t) {
        const QField f = testutil::random_field(g, rng);
        const QField back = qft_inverse(qft_forward(f), g.x1_min, g.x2_min);
        CHECK(back.grid() == g);
        CHECK(max_abs_diff(back, f) <= 1e-12);
    }
    // centered default reconstruction origin matches this grid
    const QField f = testutil::random_field(g, rng);
    CHECK(max_abs_diff(qft_inverse(qft_forward(f)), f) <= 1e-12);
}

TEST_CASE("round trip on non-power-of-two sizes") {
    testutil::Rng rng(103);
    Grid2 g;
    g.n1 = 24;
    g.n2 = 27;
    g.x1_min = -3.0;
    g.x2_min = -2.0;
    g.dx1 = 0.25;
    g.dx2 = 0.125;
    const QField f = testutil::random_field(g, rng);
    CHECK(max_abs_diff(qft_inverse(qft_forward(f), g.x1_min, g.x2_min), f) <= 1e-11);
}

TEST_CASE("impulse at zero frequency inverts to a constant") {
    Grid2 rg;
    rg.n1 = rg.n2 = 16;
    rg.x1_min = rg.x2_min = 0.0;
    rg.dx1 = rg.dx2 = 0.125;  // frequency spacing of an 8-long domain
    QField F(rg);
    F.at(0, 0) = Quaternion::real(1.0);
    const QField f = qft_inverse(F, -4.0, -4.0);
    const double expect = rg.dx1 * rg.dx2;  // dw1 dw2 weight
    for (const auto& q : f.data()) {
        CHECK(q.w == doctest::Approx(expect).epsilon(1e-12));
        CHECK(std::abs(q.x) + std::abs(q.y) + std::abs(q.z) <= 1e-15);
    }
}

TEST_CASE("fast path agrees with the direct oracle") {
    testutil::Rng rng(107);
    const Grid2 g = make_square_grid(16, -2.0, 2.0);
    for (int t = 0; t < 3; ++t) {
        const QField f = testutil::random_field(g, rng);
        const QField fast = qft_forward(f);
        const QField slow = qft_oracle(f);
        CHECK(max_abs_diff(fast, slow) <= 1e-10);
    }
    // oracle linearity
    const QField a = testutil::random_field(g, rng);
    const QField b = testutil::random_field(g, rng);
    CHECK(max_abs_diff(qft_oracle(add(a, b)), add(qft_oracle(a), qft_oracle(b))) <= 1e-12);
    // size guard
    const Grid2 big = make_square_grid(80, -2.0, 2.0);
    CHECK_THROWS(qft_oracle(QField(big)));
}

TEST_CASE("discrete Parseval") {
    testutil::Rng rng(109);
    const Grid2 g = make_square_grid(64, -6.0, 6.0);
    const QField f = testutil::random_field(g, rng);
    CHECK(norm_sq(qft_forward(f)) == doctest::Approx(norm_sq(f)).epsilon(1e-10));
}

TEST_CASE("uncertainty: gaussian reaches the Heisenberg bound with equality") {
    const Grid2 g = make_square_grid(256, -6.0, 6.0);
    const QField w = sample_window(WindowSpec{WindowKind::Gaussian, 1.0}, g);
    const UncertaintyReport rep = uncertainty(w);
    const double expect_dx = 1.0 / (2.0 * std::sqrt(3.1415926535897932384626433832795));
    for (int k = 0; k < 2; ++k) {
        CHECK(rep.delta_x[k] == doctest::Approx(expect_dx).epsilon(1e-6));
        CHECK(rep.delta_omega[k] == doctest::Approx(expect_dx).epsilon(1e-6));
        CHECK(std::abs(rep.products[k] - rep.bound) <= 1e-6);
    }
    CHECK(std::abs(rep.products[0] - rep.products[1]) <= 1e-10);
}

TEST_CASE("uncertainty: dilated gaussian still meets the bound") {
    const Grid2 g = make_square_grid(256, -6.0, 6.0);
    const QField f = map_field(g, [](double x1, double x2) {
        return Quaternion::real(std::exp(-2.0 * 3.1415926535897932384626433832795 * (x1 * x1 + x2 * x2)));
    });
    const UncertaintyReport rep = uncertainty(f);
    for (int k = 0; k < 2; ++k) CHECK(rep.products[k] >= rep.bound - 1e-6);
}

TEST_CASE("uncertainty rejects bad inputs") {
    const Grid2 g = make_square_grid(32, -1.0, 1.0);
    CHECK_THROWS(uncertainty(QField(g)));  // zero field
    // a gaussian truncated this hard has not decayed at the boundary
    const QField w = sample_window(WindowSpec{WindowKind::Gaussian, 1.0}, g);
    CHECK_THROWS(uncertainty(w));
}

TEST_CASE("zero padding preserves coordinates and transform values") {
    const Grid2 g = make_square_grid(32, -4.0, 4.0);
    const QField w = sample_window(WindowSpec{WindowKind::Gaussian, 1.0}, g);
    const QField p = zero_pad(w, 2);
    CHECK(p.grid().n1 == 64);
    CHECK(p.grid().x1_min == doctest::Approx(-8.0));
    // spectrum on the shared bins agrees (finer spacing interleaves)
    const QField F = qft_forward(w);
    const QField Fp = qft_forward(p);
    CHECK(abs(Fp.at(0, 0) - F.at(0, 0)) <= 1e-12);
    CHECK(abs(Fp.at(2, 4) - F.at(1, 2)) <= 1e-10);
}
