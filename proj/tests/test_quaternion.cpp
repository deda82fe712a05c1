#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgabor/quaternion.hpp"
#include "test_util.hpp"

using namespace qgabor;

namespace {
const Quaternion qi{0, 1, 0, 0};
const Quaternion qj{0, 0, 1, 0};
const Quaternion qk{0, 0, 0, 1};
}  // namespace

TEST_CASE("multiplication table is exact for basis elements") {
    CHECK(mul(qi, qj) == qk);
    CHECK(mul(qj, qi) == -qk);
    CHECK(mul(qj, qk) == qi);
    CHECK(mul(qk, qi) == qj);
    CHECK(mul(qi, qi) == -Quaternion::one());
    CHECK(mul(qj, qj) == -Quaternion::one());
    CHECK(mul(qk, qk) == -Quaternion::one());
    CHECK(mul(mul(qi, qj), qk) == -Quaternion::one());
}

TEST_CASE("(1+i)(1+j) expands to 1+i+j+k") {
    const Quaternion p{1, 1, 0, 0};
    const Quaternion q{1, 0, 1, 0};
    CHECK(mul(p, q) == Quaternion{1, 1, 1, 1});
}

TEST_CASE("associativity on random triples") {
    testutil::Rng rng(17);
    for (int t = 0; t < 1000; ++t) {
        const Quaternion p = rng.quaternion(), q = rng.quaternion(), r = rng.quaternion();
        CHECK(abs(mul(mul(p, q), r) - mul(p, mul(q, r))) <= 1e-14 * (1.0 + abs(p) * abs(q) * abs(r)));
    }
}

TEST_CASE("conjugation and modulus") {
    const Quaternion q{1, 1, 1, 1};
    CHECK(conj(q) == Quaternion{1, -1, -1, -1});
    CHECK(abs(q) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(conj(Quaternion::real(3.5)) == Quaternion::real(3.5));

    testutil::Rng rng(23);
    for (int t = 0; t < 1000; ++t) {
        const Quaternion p = rng.quaternion();
        // defining identity q conj(q) = |q|^2
        CHECK(abs(mul(p, conj(p)) - Quaternion::real(norm_sq(p))) <= 1e-14 * (1.0 + norm_sq(p)));
        // anti-automorphism conj(pq) = conj(q) conj(p)
        const Quaternion q2 = rng.quaternion();
        CHECK(abs(conj(mul(p, q2)) - mul(conj(q2), conj(p))) <= 1e-14 * (1.0 + abs(p) * abs(q2)));
    }
}

TEST_CASE("|pq| = |p||q| for bounded random quaternions") {
    testutil::Rng rng(29);
    for (int t = 0; t < 1000; ++t) {
        const Quaternion p = rng.quaternion(2.5), q = rng.quaternion(2.5);
        CHECK(abs(mul(p, q)) == doctest::Approx(abs(p) * abs(q)).epsilon(1e-13));
    }
}

TEST_CASE("scalar part and cyclic multiplication") {
    CHECK(scalar_part(mul(mul(qi, qj), qk)) == -1.0);
    CHECK(scalar_part(mul(mul(qj, qk), qi)) == -1.0);
    CHECK(scalar_part(qi) == 0.0);

    testutil::Rng rng(31);
    for (int t = 0; t < 10000; ++t) {
        const Quaternion p = rng.quaternion(), q = rng.quaternion(), r = rng.quaternion();
        const double pqr = scalar_part(mul(mul(p, q), r));
        const double qrp = scalar_part(mul(mul(q, r), p));
        const double rpq = scalar_part(mul(mul(r, p), q));
        const double scale = 1.0 + abs(p) * abs(q) * abs(r);
        CHECK(std::abs(pqr - qrp) <= 1e-13 * scale);
        CHECK(std::abs(pqr - rpq) <= 1e-13 * scale);
    }
}

TEST_CASE("carrier operators") {
    testutil::Rng rng(37);
    const Quaternion p = rng.quaternion();
    // C_r(p) 1 = 1 C_l(p) = p
    CHECK(carrier_apply(CarrierSide::Right, p, Quaternion::one()) == p);
    CHECK(carrier_apply(CarrierSide::Left, p, Quaternion::one()) == p);
    // C_r(j) applied to i is ij = k
    CHECK(carrier_apply(CarrierSide::Right, qj, qi) == qk);
    for (int t = 0; t < 100; ++t) {
        const Quaternion a = rng.quaternion(), b = rng.quaternion();
        CHECK(carrier_apply(CarrierSide::Right, a, b) == mul(b, a));
        CHECK(carrier_apply(CarrierSide::Left, a, b) == mul(a, b));
        // conj(C_r(p)) q = C_l(conj p) q, i.e. conj(C_r(p) conj(q)) = conj(p) ... q
        CHECK(abs(conj(carrier_apply(CarrierSide::Right, a, conj(b))) -
                  carrier_apply(CarrierSide::Left, conj(a), b)) <= 1e-14 * (1.0 + abs(a) * abs(b)));
    }
}

TEST_CASE("exponential kernels live in their complex planes") {
    const Quaternion ei = exp_i(0.731);
    const Quaternion ej = exp_j(-1.25);
    CHECK(ei.y == 0.0);
    CHECK(ei.z == 0.0);
    CHECK(ej.x == 0.0);
    CHECK(ej.z == 0.0);
    CHECK(abs(ei) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(abs(ej) == doctest::Approx(1.0).epsilon(1e-15));
}
