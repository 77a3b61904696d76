#include "pspec/oracle.hpp"

#include "pspec/passivity.hpp"
#include "pspec/synth.hpp"

#include "testgen.hpp"

#include <doctest.h>

#include <cmath>

using namespace pspec;

namespace {
RationalFunction make_rf(std::initializer_list<double> num,
                         std::initializer_list<double> den) {
    Vector n(num.size()), d(den.size());
    Eigen::Index i = 0;
    for (double v : num) n(i++) = v;
    i = 0;
    for (double v : den) d(i++) = v;
    return RationalFunction(n, d);
}

double multiset_gap(const Spectrum& a, const Spectrum& b) {
    REQUIRE(a.values.size() == b.values.size());
    double worst = 0;
    for (size_t i = 0; i < a.values.size(); ++i) {
        const double scale = std::max(1.0, std::abs(a.values[i]));
        worst = std::max(worst, std::abs(a.values[i] - b.values[i]) / scale);
    }
    return worst;
}
}  // namespace

TEST_CASE("szp_polynomial: worked convolutions") {
    // n=(s+1)(s+2), d=(s+3)(s+4) -> 2s^4 - 14s^2 + 48
    auto p = szp_polynomial(make_rf({1, 3, 2}, {1, 7, 12}));
    REQUIRE(p.coeffs.size() == 5);
    CHECK(p.coeffs(0) == doctest::Approx(2));
    CHECK(p.coeffs(1) == 0.0);
    CHECK(p.coeffs(2) == doctest::Approx(-14));
    CHECK(p.coeffs(3) == 0.0);
    CHECK(p.coeffs(4) == doctest::Approx(48));

    // n=(s+2)(s+5), d=(s+1)(s+3) -> 2s^4 - 30s^2 + 60
    p = szp_polynomial(make_rf({1, 7, 10}, {1, 4, 3}));
    CHECK(p.coeffs(0) == doctest::Approx(2));
    CHECK(p.coeffs(2) == doctest::Approx(-30));
    CHECK(p.coeffs(4) == doctest::Approx(60));

    // n = d -> 2 d(s) d(-s)
    p = szp_polynomial(make_rf({1, 4, 3}, {1, 4, 3}));
    CHECK(p.coeffs(0) == doctest::Approx(2));
    CHECK(p.coeffs(2) == doctest::Approx(2 * (2 * 3 - 16)));  // 2(2*a0*a2 - a1^2)
    CHECK(p.coeffs(4) == doctest::Approx(2 * 9));
}

TEST_CASE("szp_roots") {
    EvenPolynomial p;
    p.coeffs = Vector(5);
    p.coeffs << 2, 0, -14, 0, 48;
    auto mu = szp_roots(p);
    REQUIRE(mu.values.size() == 4);
    for (const auto& v : mu.values) {
        CHECK(std::abs(std::abs(v.real()) - 2.05) < 0.01);
        CHECK(std::abs(std::abs(v.imag()) - 0.84) < 0.01);
    }

    p.coeffs << 1, 0, -15, 0, 30;  // x = (15 +- sqrt(105))/2
    mu = szp_roots(p);
    const Vector st = mu.stable_reals();
    CHECK(st(0) == doctest::Approx(-3.5530).epsilon(1e-3));
    CHECK(st(1) == doctest::Approx(-1.5416).epsilon(1e-3));

    p.coeffs = Vector(3);
    p.coeffs << 1, 0, -4;
    mu = szp_roots(p);
    CHECK(mu.values[0].real() == doctest::Approx(-2));
    CHECK(mu.values[1].real() == doctest::Approx(2));

    p.coeffs(0) = 0;
    CHECK_THROWS_AS(szp_roots(p), ValidationError);
}

TEST_CASE("vieta_checks: worked identities") {
    // G=(s+2)(s+5)/((s+1)(s+3)): product sqrt(30), sum of squares 15
    auto rep = vieta_checks(make_rf({1, 7, 10}, {1, 4, 3}));
    CHECK(rep.product_lhs == doctest::Approx(std::sqrt(30.0)));
    CHECK(rep.product_rhs == doctest::Approx(std::sqrt(30.0)));
    CHECK(rep.sum_sq_lhs == doctest::Approx(15.0));
    CHECK(rep.sum_sq_rhs == doctest::Approx(15.0));
    CHECK(rep.pass);

    // order-1: |mu| = sqrt(p z) = 2
    rep = vieta_checks(make_rf({1, 4}, {1, 1}));
    CHECK(rep.product_lhs == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rep.sum_sq_lhs == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(rep.pass);

    // degenerate z = p
    rep = vieta_checks(make_rf({1, 4, 3}, {1, 4, 3}));
    CHECK(rep.product_lhs == doctest::Approx(3.0));  // |(-1)(-3)|
    CHECK(rep.pass);
}

TEST_CASE("real_zero_lemma_check") {
    Vector p2(2), q2(2);
    p2 << 1, 2;
    q2 << 1, 1;
    CHECK(real_zero_lemma_check(p2, q2));

    Vector p1(1), q1(1);
    p1 << 1;
    q1 << 1;
    CHECK(real_zero_lemma_check(p1, q1));  // no finite zeros

    Vector p3(3), q3(3);
    p3 << 1, 2, 3;
    q3 << 3, 2, 1;
    CHECK(real_zero_lemma_check(p3, q3));

    Vector qbad(2);
    qbad << 1, -1;
    CHECK_THROWS_AS(real_zero_lemma_check(p2, qbad), ValidationError);
}

TEST_CASE("coefficient structure: a_2n = 2(-1)^n, a_0 = 2 prod p prod z, zero trace") {
    std::mt19937_64 rng(501);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + trial % 6;
        const RationalFunction f = testgen::random_zip(rng, n);
        const EvenPolynomial p = szp_polynomial(f);
        CHECK(p.coeffs(0) == doctest::Approx(2.0 * (n % 2 == 0 ? 1 : -1)));

        // prod p * prod z = num(0) * den(0) for monic factors, so
        // a_0 = 2 * num_const * den_const.
        const double prod = f.num(f.num.size() - 1) * f.den(f.den.size() - 1);
        CHECK(p.coeffs(p.coeffs.size() - 1) ==
              doctest::Approx(2.0 * prod).epsilon(1e-8));

        // sum of all 2n spectral zeros vanishes: s^{2n-1} coefficient is zero
        CHECK(p.coeffs(1) == 0.0);
    }
}

TEST_CASE("property: oracle roots match Hamiltonian spectral zeros") {
    std::mt19937_64 rng(502);
    for (int trial = 0; trial < 100; ++trial) {
        const RationalFunction f = testgen::random_zip(rng, 1 + trial % 6);
        const Spectrum oracle = szp_roots(szp_polynomial(f));
        const Realization R =
            symmetric_from_pole_residue(pole_residue_from_rational(f));
        const Spectrum ham = spectral_zeros(R);
        CHECK(multiset_gap(oracle, ham) < 1e-6);
    }
}

TEST_CASE("property: Vieta identities on random ZIP systems") {
    std::mt19937_64 rng(503);
    for (int trial = 0; trial < 80; ++trial) {
        const RationalFunction f = testgen::random_zip(rng, 1 + trial % 5);
        const auto rep = vieta_checks(f);
        CHECK(rep.product_rel_err <= 1e-8);
        CHECK(rep.sum_sq_rel_err <= 1e-8);
    }
}
