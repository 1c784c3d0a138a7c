#include <doctest.h>

#include "helpers.hpp"
#include "qdwork/errors.hpp"
#include "qdwork/numtheory.hpp"
#include "qdwork/polyring.hpp"

using namespace qdwork;
using qdwork::test::P;

namespace {

// q^n - 1 written out coefficient by coefficient.
Poly q_pow_minus_one(std::size_t n) {
    std::vector<Rational> c(n + 1);
    c[0] = -1;
    c[n] = 1;
    return Poly::from_rationals(c);
}

long brute_totient(long n) {
    long count = 0;
    for (long k = 1; k <= n; ++k) {
        long a = n, b = k;
        while (b) {
            const long t = a % b;
            a = b;
            b = t;
        }
        count += a == 1;
    }
    return count;
}

// p when n = p^k (k >= 1), else 0.
long prime_power_base_brute(long n) {
    for (long p = 2; p <= n; ++p) {
        if (n % p) continue;
        long m = n;
        while (m % p == 0) m /= p;
        return m == 1 ? p : 0;
    }
    return 0;
}

}  // namespace

TEST_CASE("canonical coefficients") {
    const Poly a = Poly::from_rationals({make_rational(2, 4), make_rational(-6, 8), 0});
    CHECK(a.degree() == 1);
    CHECK(a.coeff(0) == make_rational(1, 2));
    CHECK(a.coeff(1) == make_rational(-3, 4));
    CHECK(a.denominator() == 4);
    CHECK(Poly().degree() == -1);
    CHECK(Poly(Rational(0)).is_zero());
    CHECK(make_rational(6, -4) == Rational(-3, 2));
}

TEST_CASE("poly_mul examples") {
    CHECK(poly_mul(P({-1, 1}), P({1, 1})) == P({-1, 0, 1}));
    CHECK(poly_mul(P({1, 1, 1}), P({1, -1})) == P({1, 0, 0, -1}));
    CHECK(poly_mul(poly_mul(cyclotomic(1), cyclotomic(3)), cyclotomic(9)) == q_pow_minus_one(9));
}

TEST_CASE("poly_divrem_exact examples") {
    CHECK(poly_divrem_exact(P({-1, 0, 0, 1}), P({-1, 1})) == P({1, 1, 1}));
    CHECK(poly_divrem_exact(P({-1, 0, 1}), P({1, 1})) == P({-1, 1}));
    CHECK_THROWS_AS(poly_divrem_exact(P({1, 0, 1}), P({-1, 1})), NonExactDivision);
    CHECK_THROWS_AS(poly_divrem_exact(P({1, 1}), Poly()), DivisionByZero);
    const auto [quo, rem] = poly_divrem(P({1, 0, 1}), P({-1, 1}));
    CHECK(quo == P({1, 1}));
    CHECK(rem == P({2}));
    const auto [q2, r2] = poly_divrem(P({1, 0, 1}), P({1, 2}));
    CHECK(q2 * P({1, 2}) + r2 == P({1, 0, 1}));
    CHECK(r2.degree() < 1);
}

TEST_CASE("poly_gcd examples") {
    CHECK(poly_gcd(P({-1, 0, 1}), P({-1, 0, 0, 1})) == P({-1, 1}));
    CHECK(poly_gcd(cyclotomic(3), cyclotomic(9)) == P({1}));
    CHECK(poly_gcd(Poly(), P({2, 2})) == P({1, 1}));
    CHECK_THROWS_AS(poly_gcd(Poly(), Poly()), BothZero);
}

TEST_CASE("poly_eval examples") {
    CHECK(poly_eval(cyclotomic(9), 1) == 3);
    CHECK(poly_eval(cyclotomic(6), 1) == 1);
    CHECK(poly_eval(P({-1, 0, 1}), 3) == 8);
    CHECK(poly_eval(P({1, 1}), make_rational(1, 2)) == make_rational(3, 2));
}

TEST_CASE("cyclotomic examples and printing") {
    CHECK(cyclotomic(1) == P({-1, 1}));
    CHECK(cyclotomic(2) == P({1, 1}));
    CHECK(cyclotomic(9) == P({1, 0, 0, 1, 0, 0, 1}));
    CHECK(to_string(cyclotomic(9)) == "q^6 + q^3 + 1");
    CHECK(to_string(cyclotomic(1)) == "q - 1");
    CHECK(to_string(P({-1, 0, -2})) == "-2*q^2 - 1");
    CHECK(to_string(Poly()) == "0");
    CHECK(to_string(Poly::from_rationals({0, make_rational(3, 2)})) == "3/2*q");
    CHECK_THROWS_AS(cyclotomic(0), InvalidParameter);
}

TEST_CASE("product of cyclotomics over divisors is q^n - 1") {
    for (std::size_t n = 1; n <= 100; ++n) {
        Poly prod = P({1});
        for (std::size_t d = 1; d <= n; ++d)
            if (n % d == 0) prod = poly_mul(prod, cyclotomic(d));
        CHECK_MESSAGE(prod == q_pow_minus_one(n), "n = " << n);
    }
}

TEST_CASE("cyclotomic degree is Euler's totient") {
    for (long n = 1; n <= 100; ++n) CHECK(cyclotomic(static_cast<std::size_t>(n)).degree() == brute_totient(n));
}

TEST_CASE("cyclotomic value at 1") {
    for (long n = 2; n <= 200; ++n) {
        const long p = prime_power_base_brute(n);
        CHECK_MESSAGE(poly_eval(cyclotomic(static_cast<std::size_t>(n)), 1) == (p ? p : 1), "n = " << n);
    }
    CHECK(poly_eval(cyclotomic(1), 1) == 0);
}

TEST_CASE("cyclotomic is monic, integral and palindromic") {
    for (std::size_t n = 2; n <= 120; ++n) {
        const Poly& c = cyclotomic(n);
        CHECK(c.is_monic());
        CHECK(c.is_integral());
        const auto coeffs = c.coefficients();
        CHECK(std::equal(coeffs.begin(), coeffs.end(), coeffs.rbegin()));
    }
}

TEST_CASE("gcd divides both inputs and is monic") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Poly common = test::random_nonzero_poly(rng, 3, 3);
        const Poly a = poly_mul(common, test::random_nonzero_poly(rng, 4, 4));
        const Poly b = poly_mul(common, test::random_nonzero_poly(rng, 4, 4));
        const Poly g = poly_gcd(a, b);
        CHECK(g.is_monic());
        CHECK(poly_divides(g, a));
        CHECK(poly_divides(g, b));
        CHECK(poly_divides(g, common.monic()) == (g.degree() == common.degree()));
        CHECK(poly_divides(common.monic(), g));
    }
}

TEST_CASE("multiplication is commutative and associative") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Poly a = test::random_poly(rng, 6, 9);
        const Poly b = test::random_poly(rng, 6, 9) * make_rational(1, 3);
        const Poly c = test::random_poly(rng, 6, 9);
        CHECK(poly_mul(a, b) == poly_mul(b, a));
        CHECK(poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c)));
        CHECK(poly_mul(a, b + c) == poly_mul(a, b) + poly_mul(a, c));
    }
}

TEST_CASE("sparse kernels agree with dense arithmetic") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const Poly a = test::random_nonzero_poly(rng, 8, 5);
        for (std::size_t j = 1; j <= 5; ++j) {
            Poly b = a;
            b.mul_q_power_minus_one(j);
            CHECK(b == poly_mul(a, q_pow_minus_one(j)));
            b.div_q_power_minus_one(j);
            CHECK(b == a);
            Poly c = a;
            c.shift_up(j);
            CHECK(c == poly_mul(a, Poly::monomial(j)));
            c.shift_down(j);
            CHECK(c == a);
        }
    }
    Poly odd = P({1, 0, 1});
    CHECK_THROWS_AS(odd.div_q_power_minus_one(1), NonExactDivision);
    CHECK_THROWS_AS(odd.shift_down(1), NonExactDivision);
}

TEST_CASE("cyclotomic by Mobius product matches the division route") {
    for (std::uint64_t n = 1; n <= 60; ++n) {
        Poly num = P({1}), den = P({1});
        for (std::uint64_t d : nt::divisors(n)) {
            const int mu = nt::mobius(n / d);
            if (mu == 1) num.mul_q_power_minus_one(d);
            if (mu == -1) den.mul_q_power_minus_one(d);
        }
        CHECK(poly_divrem_exact(num, den) == cyclotomic(n));
    }
}

TEST_CASE("number theory helpers") {
    CHECK(nt::is_prime(97));
    CHECK_FALSE(nt::is_prime(91));
    CHECK_FALSE(nt::is_prime(1));
    CHECK(nt::totient(36) == 12);
    CHECK(nt::mobius(30) == -1);
    CHECK(nt::mobius(12) == 0);
    CHECK(nt::prime_power_base(49) == 7);
    CHECK(nt::prime_power_base(12) == 0);
    CHECK(nt::inverse_mod(4, 25) == 19);
    CHECK(nt::mod(-7, 5) == 3);
    CHECK_THROWS_AS(nt::checked_pow(10, 30), InvalidParameter);
}
