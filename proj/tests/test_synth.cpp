#include "pspec/synth.hpp"

#include "pspec/poly.hpp"

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
}  // namespace

TEST_CASE("pole_residue_from_rational: partial fractions of the ZIP examples") {
    // (s+2)(s+5)/((s+1)(s+3)) = 1 + 2/(s+1) + 1/(s+3)
    auto pr = pole_residue_from_rational(make_rf({1, 7, 10}, {1, 4, 3}));
    CHECK(pr.g_inf == doctest::Approx(1));
    CHECK(pr.poles(0) == doctest::Approx(-3));
    CHECK(pr.poles(1) == doctest::Approx(-1));
    CHECK(pr.residues(0) == doctest::Approx(1));
    CHECK(pr.residues(1) == doctest::Approx(2));
    CHECK(pr.sign == 1);

    // (s+1)(s+3)/((s+2)(s+5)) = 1 - (1/3)/(s+2) - (8/3)/(s+5)
    pr = pole_residue_from_rational(make_rf({1, 4, 3}, {1, 7, 10}));
    CHECK(pr.residues(0) == doctest::Approx(-8.0 / 3.0));
    CHECK(pr.residues(1) == doctest::Approx(-1.0 / 3.0));
    CHECK(pr.sign == -1);

    // (s+4)/(s+1) = 1 + 3/(s+1)
    pr = pole_residue_from_rational(make_rf({1, 4}, {1, 1}));
    CHECK(pr.g_inf == doctest::Approx(1));
    CHECK(pr.poles(0) == doctest::Approx(-1));
    CHECK(pr.residues(0) == doctest::Approx(3));

    CHECK_THROWS_AS(pole_residue_from_rational(make_rf({1, 2, 2}, {1, 2, 1})),
                    ValidationError);  // repeated pole at -1
    CHECK_THROWS_AS(pole_residue_from_rational(make_rf({1, 0, 1}, {1, 0, 2})),
                    ValidationError);  // nonreal poles
}

TEST_CASE("symmetric_from_pole_residue") {
    Vector p(2), g(2);
    p << -3, -1;
    g << 1, 2;
    const Realization R = symmetric_from_pole_residue(PoleResidue(1, p, g));
    CHECK(R.A(0, 0) == doctest::Approx(-3));
    CHECK(R.A(1, 1) == doctest::Approx(-1));
    CHECK(R.B(0, 0) == doctest::Approx(1));
    CHECK(R.B(1, 0) == doctest::Approx(std::sqrt(2.0)));
    CHECK((R.C - R.B.transpose()).norm() < 1e-15);
    CHECK(R.D(0, 0) == doctest::Approx(1));
    CHECK(validate_realization(R).sign == 1);

    const Realization Rn = symmetric_from_pole_residue(PoleResidue(1, p, Vector(-g)));
    CHECK((Rn.C + Rn.B.transpose()).norm() < 1e-15);
    CHECK(validate_realization(Rn).sign == -1);

    Vector p1(1), g1(1);
    p1 << -1;
    g1 << 3;
    const Realization Rs = symmetric_from_pole_residue(PoleResidue(1, p1, g1));
    CHECK(Rs.B(0, 0) == doctest::Approx(std::sqrt(3.0)));
}

TEST_CASE("foster1_rc: element values of the RC impedance figure") {
    // Z = 1 + 2/(s+1) + 1/(s+3)
    Vector p(2), g(2);
    p << -3, -1;
    g << 1, 2;
    const FosterNetwork net = foster1_rc(PoleResidue(1, p, g));
    CHECK(net.top_resistor == doctest::Approx(1));
    REQUIRE(net.branches.size() == 2);
    // branch order follows ascending pole order: pole -3 first
    CHECK(net.branches[0].resistance == doctest::Approx(1.0 / 3.0));
    CHECK(net.branches[0].storage == doctest::Approx(1.0));
    CHECK(net.branches[1].resistance == doctest::Approx(2.0));
    CHECK(net.branches[1].storage == doctest::Approx(0.5));

    Vector pa(1), ga(1);
    pa << -4;
    ga << 2;
    const auto one = foster1_rc(PoleResidue(1, pa, ga));
    CHECK(one.branches[0].resistance == doctest::Approx(0.5));  // g/a
    CHECK(one.branches[0].storage == doctest::Approx(0.5));     // 1/g

    const auto r_only = foster1_rc(PoleResidue(2, Vector(0), Vector(0)));
    CHECK(r_only.top_resistor == doctest::Approx(2));
    CHECK(r_only.branches.empty());

    CHECK_THROWS_AS(foster1_rc(PoleResidue(1, p, Vector(-g))), ValidationError);
}

TEST_CASE("foster2_rl: element values of the RL admittance figure") {
    // Y = 1 + 2/(s+1) + 1/(s+3)
    Vector p(2), g(2);
    p << -3, -1;
    g << 1, 2;
    const FosterNetwork net = foster2_rl(PoleResidue(1, p, g));
    CHECK(net.top_resistor == doctest::Approx(1));
    REQUIRE(net.branches.size() == 2);
    CHECK(net.branches[0].resistance == doctest::Approx(3.0));  // -p/g for pole -3
    CHECK(net.branches[0].storage == doctest::Approx(1.0));
    CHECK(net.branches[1].resistance == doctest::Approx(0.5));
    CHECK(net.branches[1].storage == doctest::Approx(0.5));

    const auto y_only = foster2_rl(PoleResidue(5, Vector(0), Vector(0)));
    CHECK(y_only.top_resistor == doctest::Approx(0.2));
}

TEST_CASE("netlist: topology and determinism") {
    Vector p(2), g(2);
    p << -3, -1;
    g << 1, 2;
    const std::string rc = netlist(foster1_rc(PoleResidue(1, p, g)));
    CHECK(rc == "R0 in n1 1\n"
                "R1 n1 n2 0.333333333333\n"
                "C1 n1 n2 1\n"
                "R2 n2 0 2\n"
                "C2 n2 0 0.5\n");

    const std::string rl = netlist(foster2_rl(PoleResidue(1, p, g)));
    CHECK(rl == "R0 in 0 1\n"
                "R1 in n1 3\n"
                "L1 n1 0 1\n"
                "R2 in n2 0.5\n"
                "L2 n2 0 0.5\n");

    const std::string r_only = netlist(foster1_rc(PoleResidue(2, Vector(0), Vector(0))));
    CHECK(r_only == "R0 in 0 2\n");
}

TEST_CASE("round trip: rational -> pole/residue -> realization -> transfer function") {
    std::mt19937_64 rng(401);
    for (int trial = 0; trial < 40; ++trial) {
        const RationalFunction f = testgen::random_zip(rng, 1 + trial % 6);
        const PoleResidue pr = pole_residue_from_rational(f);
        const RationalFunction back = rational_from_pole_residue(pr);
        CHECK((f.num - back.num).cwiseAbs().maxCoeff() <
              1e-9 * std::max(1.0, f.num.cwiseAbs().maxCoeff()));
        CHECK((f.den - back.den).cwiseAbs().maxCoeff() <
              1e-9 * std::max(1.0, f.den.cwiseAbs().maxCoeff()));

        // realization reproduces the transfer function at sample points
        const Realization R = symmetric_from_pole_residue(pr);
        for (double w : {0.3, 1.7, 4.0}) {
            const Complex s(0.1, w);
            const Matrix I = Matrix::Identity(R.n(), R.n());
            Eigen::MatrixXcd resolvent =
                (s * I.cast<Complex>() - R.A.cast<Complex>()).inverse();
            const Complex gval =
                (R.C.cast<Complex>() * resolvent * R.B.cast<Complex>())(0, 0) +
                R.D(0, 0);
            CHECK(std::abs(gval - f.eval(s)) < 1e-8 * std::max(1.0, std::abs(gval)));
        }
    }
}

TEST_CASE("round trip: Foster-I network impedance matches the input") {
    std::mt19937_64 rng(402);
    for (int trial = 0; trial < 20; ++trial) {
        const RationalFunction f = testgen::random_zip(rng, 1 + trial % 5);
        const PoleResidue pr = pole_residue_from_rational(f);
        if (pr.sign < 0) continue;
        const FosterNetwork net = foster1_rc(pr);
        for (double w : {0.25, 1.0, 3.3}) {
            const Complex s(0.0, w);
            Complex z = net.top_resistor;
            for (const auto& b : net.branches) {
                // parallel R || 1/(sC)
                const Complex zc = 1.0 / (s * b.storage);
                z += b.resistance * zc / (b.resistance + zc);
            }
            CHECK(std::abs(z - f.eval(s)) < 1e-9 * std::max(1.0, std::abs(z)));
        }
    }
}

TEST_CASE("duality at order 1: RC and RL branch values are reciprocal-related") {
    Vector p(1), g(1);
    p << -2;
    g << 4;
    const PoleResidue pr(1, p, g);
    const auto rc = foster1_rc(pr);
    const auto rl = foster2_rl(pr);
    CHECK(rc.branches[0].resistance == doctest::Approx(2.0));   // g/(-p)
    CHECK(rl.branches[0].resistance == doctest::Approx(0.5));   // (-p)/g
    CHECK(rc.branches[0].storage == doctest::Approx(rl.branches[0].storage));
}
