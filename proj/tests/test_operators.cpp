#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "derivkit/blackbox.hpp"
#include "derivkit/operator_func.hpp"
#include "derivkit/rng.hpp"

using namespace derivkit;

namespace {

Poly P(std::initializer_list<long> ascending) {
    std::vector<Rational> c;
    for (long v : ascending) c.emplace_back(v);
    return Poly(std::move(c));
}

OperatorFunc Dpow(unsigned k) {
    return OperatorFunc::derivation_term(k, RatFunc::one());
}

}  // namespace

TEST_CASE("formal derivative basics") {
    CHECK(formal_derivative(RatFunc::t()) == RatFunc::one());
    CHECK(formal_derivative(RatFunc::one()).is_zero());
    // D(1/t) = -1/t^2, quotient rule
    CHECK(formal_derivative(RatFunc(P({1}), P({0, 1}))) == RatFunc(P({-1}), P({0, 0, 1})));
}

TEST_CASE("Leibniz law on random pairs") {
    ValueGen gen(314159);
    for (int i = 0; i < 1000; ++i) {
        RatFunc u = gen.ratfunc(3);
        RatFunc v = gen.ratfunc(3);
        CHECK(formal_derivative(u * v) == u * formal_derivative(v) + v * formal_derivative(u));
    }
}

TEST_CASE("apply examples") {
    RatFunc t = RatFunc::t();
    CHECK(OperatorFunc::scaled_identity(RatFunc(Rational(3))).apply(t) == RatFunc(P({0, 3})));
    CHECK(Dpow(1).apply(t * t) == RatFunc(P({0, 2})));
    // (t*D^2)(t^3) = 6t^2
    CHECK(OperatorFunc::derivation_term(2, t).apply(t * t * t) == RatFunc(P({0, 0, 6})));
}

TEST_CASE("delta closed forms") {
    RatFunc t = RatFunc::t();

    // delta annihilates linear maps, structurally
    CHECK(delta(t, OperatorFunc::scaled_identity(RatFunc(Rational(5)))).is_zero());

    // delta_t(D) = 1 * id
    OperatorFunc d1 = delta(t, Dpow(1));
    CHECK(d1 == OperatorFunc::scaled_identity(RatFunc::one()));

    // delta_t(D^2) = 0*id + 2*D
    OperatorFunc d2 = delta(t, Dpow(2));
    CHECK(d2 == OperatorFunc::derivation_term(1, RatFunc(Rational(2))));
}

TEST_CASE("delta chains") {
    RatFunc t = RatFunc::t();
    RatFunc t1 = RatFunc(P({1, 1}));

    CHECK(delta_chain({{t, t1}, Dpow(1)}).is_zero());
    CHECK(delta_chain({{t, t * t, t.inv()}, Dpow(2)}).is_zero());
    // delta_t(delta_t(D^2)) = 2*D(t)*D(t)*id = 2*id
    CHECK(delta_chain({{t, t}, Dpow(2)}) ==
          OperatorFunc::scaled_identity(RatFunc(Rational(2))));
}

TEST_CASE("operator/evaluation coherence and symmetry") {
    ValueGen gen(2718);
    for (int i = 0; i < 200; ++i) {
        RatFunc alpha = gen.nonconstant_ratfunc(2);
        RatFunc beta = gen.nonconstant_ratfunc(2);
        RatFunc x = gen.ratfunc(2);
        OperatorFunc f = OperatorFunc::scaled_identity(gen.ratfunc(2)) +
                         OperatorFunc::derivation_term(1, gen.ratfunc(2)) +
                         OperatorFunc::derivation_term(2, gen.ratfunc(2));
        CHECK(delta(alpha, f).apply(x) == f.apply(alpha * x) - alpha * f.apply(x));
        CHECK(delta(alpha, delta(beta, f)) == delta(beta, delta(alpha, f)));
    }
}

TEST_CASE("Q-homogeneity of the represented maps") {
    ValueGen gen(1618);
    for (int i = 0; i < 200; ++i) {
        Rational q = gen.rational();
        RatFunc x = gen.ratfunc(2);
        OperatorFunc f = OperatorFunc::scaled_identity(gen.ratfunc(2)) +
                         OperatorFunc::derivation_term(2, gen.ratfunc(2));
        CHECK(f.apply(RatFunc(q) * x) == RatFunc(q) * f.apply(x));
    }
}

TEST_CASE("delta kills scaled identities for random alpha") {
    ValueGen gen(4242);
    for (int i = 0; i < 200; ++i) {
        RatFunc lambda = gen.ratfunc(3);
        RatFunc alpha = gen.nonconstant_ratfunc(3);
        CHECK(delta(alpha, OperatorFunc::scaled_identity(lambda)).is_zero());
    }
}

TEST_CASE("order ladder for D^k, k = 1..4") {
    for (unsigned k = 1; k <= 4; ++k) {
        OrderVerdict pass = is_order_n_derivation(Dpow(k), k, 8, 1000 + k);
        CHECK(pass.is_order_n);
        CHECK(!pass.witness.has_value());

        OrderVerdict fail = is_order_n_derivation(Dpow(k), k - 1, 8, 2000 + k);
        CHECK(!fail.is_order_n);
        REQUIRE(fail.witness.has_value());
        // the witness re-evaluates to the recorded nonzero value
        OperatorFunc chain = delta_chain({fail.witness->alphas, Dpow(k)});
        RatFunc v = chain.apply(fail.witness->x);
        CHECK(!v.is_zero());
        CHECK(v == fail.witness->value);
    }
}

TEST_CASE("identity map fails f(1) = 0") {
    OrderVerdict v = is_order_n_derivation(OperatorFunc::scaled_identity(RatFunc::one()), 3, 4, 7);
    CHECK(!v.is_order_n);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->alphas.empty());
    CHECK(v.witness->value == RatFunc::one());
}

TEST_CASE("difference operators on black boxes") {
    BlackBoxFunc sq = [](const Rational& x) -> Rational { return x * x; };

    BlackBoxFunc d1 = difference(Rational(1), sq);
    CHECK(d1(Rational(3)) == Rational(7));  // 2x+1 at x=3
    CHECK(d1(Rational(0)) == Rational(1));

    // second difference of x^2 is the constant 2*y1*y2
    BlackBoxFunc d2 = difference_chain({Rational(1), Rational(3)}, sq);
    CHECK(d2(Rational(0)) == Rational(6));
    CHECK(d2(Rational(17, 5)) == Rational(6));

    BlackBoxFunc d3 = difference_chain({Rational(1), Rational(1), Rational(1)}, sq);
    CHECK(d3(Rational(9)) == Rational(0));
}
