#include <doctest.h>

#include "helpers.hpp"
#include "qdwork/cyclofactors.hpp"
#include "qdwork/errors.hpp"
#include "qdwork/ratfun.hpp"

using namespace qdwork;
using qdwork::test::P;

namespace {

RatFun random_ratfun(std::mt19937& rng) {
    // Denominators from cyclotomic pieces keep every modulus below coprime.
    static const std::vector<Poly> dens = {P({1}), P({1, 1}), P({1, 0, 1}), P({2, 3})};
    std::uniform_int_distribution<std::size_t> pick(0, dens.size() - 1);
    return rf_new(test::random_poly(rng, 4, 3), poly_mul(dens[pick(rng)], dens[pick(rng)]));
}

}  // namespace

TEST_CASE("rf_new examples") {
    const RatFun a = rf_new(P({-1, 0, 1}), P({-1, 1}));
    CHECK(a.num() == P({1, 1}));
    CHECK(a.den() == P({1}));
    const RatFun b = rf_new(P({0, 0, 2}), P({2}));
    CHECK(b.num() == P({0, 0, 1}));
    CHECK(b.den() == P({1}));
    const RatFun c = rf_new(P({-1, 0, 0, 1}), P({-1, 0, 1}));
    CHECK(c.num() == P({1, 1, 1}));
    CHECK(c.den() == P({1, 1}));
    const RatFun zero = rf_new(Poly(), P({3, 1}));
    CHECK(zero.is_zero());
    CHECK(zero.den() == P({1}));
    CHECK_THROWS_AS(rf_new(P({1}), Poly()), DivisionByZero);
}

TEST_CASE("denominators are monic") {
    const RatFun f = rf_new(P({1}), P({2, -4}));
    CHECK(f.den() == Poly::from_rationals({make_rational(-1, 2), 1}));
    CHECK(f.num() == Poly::from_rationals({make_rational(-1, 4)}));
}

TEST_CASE("rf_arith examples") {
    const RatFun inv = rf_new(P({1}), P({1, 1}));
    const RatFun qinv = rf_new(P({0, 1}), P({1, 1}));
    CHECK(rf_arith(ArithOp::Add, inv, qinv) == rf_new(P({1}), P({1})));
    const RatFun prod = rf_arith(ArithOp::Mul, rf_new(P({1}), P({1, -1})), rf_new(P({1, 0, -1}), P({1})));
    CHECK(prod.num() == P({1, 1}));
    CHECK(prod.den() == P({1}));
    CHECK(rf_arith(ArithOp::Div, qinv, inv) == rf_new(P({0, 1}), P({1})));
    CHECK_THROWS_AS(rf_arith(ArithOp::Div, qinv, rf_new(Poly(), P({1}))), DivisionByZero);

    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const RatFun x = random_ratfun(rng);
        CHECK(rf_arith(ArithOp::Sub, x, x).is_zero());
        CHECK(rf_arith(ArithOp::Sub, x, x).den() == P({1}));
    }
}

TEST_CASE("rf_congruent examples") {
    CHECK(rf_congruent(rf_new(P({-1, 0, 0, 1}), P({-1, 1})), rf_new(Poly(), P({1})), cyclotomic(3)) ==
          Congruence::True);
    CHECK(rf_congruent(rf_new(P({1}), P({1, 1})), rf_new(Poly(), P({1})), P({1, 1})) ==
          Congruence::NonCoprimeDenominator);
    CHECK(rf_congruent(rf_new(P({0, 0, 0, 0, 1}), P({1})), rf_new(P({1}), P({1})), cyclotomic(4)) ==
          Congruence::True);
    CHECK(rf_congruent(rf_new(P({0, 1}), P({1})), rf_new(P({1}), P({1})), cyclotomic(4)) == Congruence::False);
    CHECK_THROWS_AS(rf_congruent(rf_new(P({1}), P({1})), rf_new(P({1}), P({1})), P({5})), InvalidModulus);
    CHECK(to_string(Congruence::NonCoprimeDenominator) == "NonCoprimeDenominator");
}

TEST_CASE("rf_new is idempotent") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const RatFun x = rf_new(test::random_poly(rng, 5, 4), test::random_nonzero_poly(rng, 4, 4));
        CHECK(rf_new(x.num(), x.den()) == x);
        if (!x.is_zero()) CHECK(poly_gcd(x.num(), x.den()) == P({1}));
        CHECK(x.den().is_monic());
    }
}

TEST_CASE("congruence modulo a product implies congruence modulo a factor") {
    std::mt19937 rng(17);
    const std::vector<std::pair<Poly, Poly>> moduli = {
        {cyclotomic(3), cyclotomic(5)}, {cyclotomic(3), cyclotomic(3)}, {P({-2, 1}), cyclotomic(7)}};
    int implied = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const auto& [p1, p2] = moduli[static_cast<std::size_t>(trial) % moduli.size()];
        const Poly prod = poly_mul(p1, p2);
        const RatFun c = random_ratfun(rng);
        // Half of the trials are congruent by construction.
        RatFun b = trial % 2 ? c + rf_new(poly_mul(prod, test::random_poly(rng, 2, 3)), c.den()) : random_ratfun(rng);
        if (rf_congruent(b, c, prod) == Congruence::True) {
            ++implied;
            CHECK(rf_congruent(b, c, p1) == Congruence::True);
            CHECK(rf_congruent(b, c, p2) == Congruence::True);
        }
    }
    CHECK(implied >= 100);
}

TEST_CASE("congruence is an equivalence relation") {
    std::mt19937 rng(19);
    const Poly p = cyclotomic(5);
    for (int trial = 0; trial < 150; ++trial) {
        const RatFun a = random_ratfun(rng);
        const RatFun b = a + rf_new(poly_mul(p, test::random_poly(rng, 2, 2)), P({1, 1}));
        const RatFun c = trial % 3 ? b + rf_new(poly_mul(p, test::random_poly(rng, 2, 2)), P({1})) : random_ratfun(rng);
        CHECK(rf_congruent(a, a, p) == Congruence::True);
        CHECK(rf_congruent(a, b, p) == Congruence::True);
        CHECK(rf_congruent(b, a, p) == Congruence::True);
        const bool bc = rf_congruent(b, c, p) == Congruence::True;
        CHECK((rf_congruent(a, c, p) == Congruence::True) == bc);
    }
}

TEST_CASE("cyclotomic factorization hint is consistent") {
    CycloFactors f = CycloFactors::of_q_power_minus_one(6) * CycloFactors::of_cyclotomic(3) * CycloFactors::of_q(2);
    CHECK(f.exponent(3) == 2);
    CHECK(f.exponent(6) == 1);
    CHECK(f.q_exponent() == 2);
    CHECK(f.to_poly() == poly_mul(poly_mul(P({-1, 0, 0, 0, 0, 0, 1}), cyclotomic(3)), P({0, 0, 1})));
    const RatFun fast = RatFun::from_factored(poly_mul(cyclotomic(6), P({3, 1})), f);
    const RatFun slow = rf_new(poly_mul(cyclotomic(6), P({3, 1})), f.to_poly());
    CHECK(fast == slow);
    CHECK(divisible_by_cyclotomic(poly_mul(cyclotomic(9), P({2, 1})), 9));
    CHECK_FALSE(divisible_by_cyclotomic(P({2, 1}), 9));

    std::mt19937 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const RatFun a = RatFun::from_factored(test::random_poly(rng, 5, 3), CycloFactors::of_q_power_minus_one(2, 2));
        const RatFun b = RatFun::from_factored(test::random_poly(rng, 5, 3), CycloFactors::of_cyclotomic(3) *
                                                                                  CycloFactors::of_q(1));
        const RatFun plain_a = rf_new(a.num(), a.den()), plain_b = rf_new(b.num(), b.den());
        CHECK(a + b == rf_new(poly_mul(plain_a.num(), plain_b.den()) + poly_mul(plain_b.num(), plain_a.den()),
                              poly_mul(plain_a.den(), plain_b.den())));
        CHECK(a * b == rf_new(poly_mul(plain_a.num(), plain_b.num()), poly_mul(plain_a.den(), plain_b.den())));
    }
}
