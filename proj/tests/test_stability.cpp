#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "derivkit/rng.hpp"
#include "derivkit/stability.hpp"

using namespace derivkit;

TEST_CASE("noise fixture is exactly bounded and deterministic") {
    NoisyFunc f = make_noisy(Rational(2), Rational(1, 100), 42);
    ValueGen gen(9);
    for (int i = 0; i < 200; ++i) {
        Rational x = gen.rational(1000, 64);
        Rational b = f.base(x) - Rational(2) * x;
        CHECK(b >= 0);
        CHECK(b <= Rational(1, 100));
        CHECK(f.base(x) == f.base(x));
    }

    NoisyFunc exact = make_noisy(Rational(5, 3), Rational(0), 42);
    for (int i = 0; i < 50; ++i) {
        Rational x = gen.rational();
        CHECK(exact.base(x) == Rational(5, 3) * x);
    }
}

TEST_CASE("noise defect stays within the designed triangle bound") {
    NoisyFunc f = make_noisy(Rational(2), Rational(1, 100), 42);
    ValueGen gen(10);
    for (int i = 0; i < 500; ++i) {
        Rational x = gen.rational(500, 64);
        Rational y = gen.rational(500, 64);
        Rational d = rational_abs(f.base(x + y) - f.base(x) - f.base(y));
        CHECK(d <= Rational(2, 100));  // nonnegative noise: 2*eps, within the 3*eps triangle bound
    }
}

TEST_CASE("stabilizer is the identity on additive inputs") {
    BlackBoxFunc lin = [](const Rational& x) -> Rational { return Rational(-7, 3) * x; };
    for (unsigned depth : {1u, 5u, 20u}) {
        BlackBoxFunc a = hyers_stabilize(lin, depth);
        ValueGen gen(depth);
        for (int i = 0; i < 100; ++i) {
            Rational x = gen.rational();
            CHECK(a(x) == lin(x));
        }
    }
}

TEST_CASE("negative control: x^2 is scaled up, not stabilized") {
    BlackBoxFunc sq = [](const Rational& x) -> Rational { return x * x; };
    BlackBoxFunc a = hyers_stabilize(sq, 4);
    CHECK(a(Rational(1)) == Rational(16));
    CHECK(a(Rational(1, 2)) == Rational(4));
}

TEST_CASE("cauchy defect") {
    BlackBoxFunc lin = [](const Rational& x) -> Rational { return Rational(3) * x; };
    CHECK(cauchy_defect(lin, 100, 5, Rational(10)) == 0);

    NoisyFunc noisy = make_noisy(Rational(2), Rational(1, 100), 42);
    Rational d = cauchy_defect(noisy.base, 500, 6, Rational(10));
    CHECK(d >= 0);
    CHECK(d <= Rational(2, 100));

    BlackBoxFunc sq = [](const Rational& x) -> Rational { return x * x; };
    CHECK(cauchy_defect(sq, 500, 7, Rational(10)) >= Rational(100));
}

TEST_CASE("telescoping bound holds exactly on probed points") {
    NoisyFunc noisy = make_noisy(Rational(2), Rational(1, 100), 42);
    const unsigned depth = 12;
    ValueGen gen(8);
    std::vector<Rational> points;
    for (int i = 0; i < 50; ++i) points.push_back(gen.rational(640, 64));

    // measured defect over the doubling pairs of the probe set
    Rational eps_hat(0);
    for (const Rational& x : points) {
        Rational u = x;
        for (unsigned j = 0; j < depth; ++j) {
            Rational d = rational_abs(noisy.base(u + u) - noisy.base(u) - noisy.base(u));
            if (d > eps_hat) eps_hat = d;
            u = u * 2;
        }
    }

    for (const Rational& x : points) {
        for (unsigned j = 0; j < depth; ++j) {
            Rational lo = hyers_stabilize(noisy.base, j + 1)(x);
            Rational hi = j == 0 ? noisy.base(x) : hyers_stabilize(noisy.base, j)(x);
            CHECK(rational_abs(lo - hi) <= eps_hat / pow2(j + 1));
        }
    }
}

TEST_CASE("defect contraction on matched pairs is an exact identity") {
    NoisyFunc noisy = make_noisy(Rational(1), Rational(1, 7), 13);
    const unsigned depth = 9;
    BlackBoxFunc a = hyers_stabilize(noisy.base, depth);
    Rational scale = pow2(depth);
    ValueGen gen(21);
    for (int i = 0; i < 100; ++i) {
        Rational x = gen.rational();
        Rational y = gen.rational();
        Rational lhs = rational_abs(a(x + y) - a(x) - a(y));
        Rational rhs = rational_abs(noisy.base(scale * (x + y)) - noisy.base(scale * x) -
                                    noisy.base(scale * y));
        CHECK(lhs == rhs / scale);
    }
}

TEST_CASE("recovery on the designed fixture") {
    NoisyFunc noisy = make_noisy(Rational(2), Rational(1, 100), 42);
    RecoveryResult r = approx_derivation_recover(noisy.base, 1, 20, 200, 42, Rational(10));
    CHECK(r.report.pass);
    CHECK(r.report.epsilon_hat <= Rational(2, 100));
    CHECK(rational_abs(r.lambda - 2) <= Rational(1, 100) / pow2(20));
    CHECK(r.report.residual_sup <= r.report.epsilon_hat);
}

TEST_CASE("recovery of an exactly linear function") {
    BlackBoxFunc lin = [](const Rational& x) -> Rational { return Rational(2) * x; };
    RecoveryResult r = approx_derivation_recover(lin, 1, 8, 100, 3, Rational(10));
    CHECK(r.lambda == Rational(2));
    CHECK(r.report.residual_sup == 0);
    CHECK(r.report.epsilon_hat == 0);
    CHECK(r.report.pass);
}

TEST_CASE("recovery rejects x^2") {
    BlackBoxFunc sq = [](const Rational& x) -> Rational { return x * x; };
    RecoveryResult r = approx_derivation_recover(sq, 1, 10, 100, 4, Rational(10));
    CHECK(!r.report.pass);
}

TEST_CASE("monotone improvement against a deep reference") {
    NoisyFunc noisy = make_noisy(Rational(2), Rational(1, 100), 42);
    const unsigned depth = 6;
    BlackBoxFunc ref = hyers_stabilize(noisy.base, depth + 10);
    ValueGen gen(30);
    std::vector<Rational> points;
    for (int i = 0; i < 100; ++i) points.push_back(gen.rational(640, 64));

    auto sup_gap = [&](unsigned d) {
        BlackBoxFunc a = hyers_stabilize(noisy.base, d);
        Rational worst(0);
        for (const Rational& x : points) {
            Rational g = rational_abs(a(x) - ref(x));
            if (g > worst) worst = g;
        }
        return worst;
    };
    CHECK(sup_gap(depth + 1) <= sup_gap(depth));
}
