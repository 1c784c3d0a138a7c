#include <doctest.h>

#include <random>

#include "qdwork/errors.hpp"
#include "qdwork/numtheory.hpp"
#include "qdwork/padic.hpp"

using namespace qdwork;

namespace {

const std::vector<long> kPrimesTo97 = {5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

int gmp_jacobi(long a, long n) { return mpz_jacobi(Integer(a).get_mpz_t(), Integer(n).get_mpz_t()); }

// C(2k, k) by the multiplicative formula in machine integers (exact for k <= 30).
long long central_binomial(long k) {
    long long c = 1;
    for (long i = 1; i <= k; ++i) c = c * (k + i) / i;
    return c;
}

}  // namespace

TEST_CASE("jacobi examples") {
    CHECK(jacobi(-1, 3) == -1);
    CHECK(jacobi(-1, 5) == 1);
    CHECK(jacobi(2, 15) == 1);
    CHECK(jacobi(6, 9) == 0);
    CHECK(jacobi(5, 1) == 1);
    CHECK_THROWS_AS(jacobi(3, 8), InvalidParameter);
    CHECK_THROWS_AS(jacobi(3, -5), InvalidParameter);
}

TEST_CASE("jacobi agrees with GMP, is multiplicative and obeys Euler's criterion") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> a_dist(-500, 500), n_dist(0, 300);
    for (int trial = 0; trial < 2000; ++trial) {
        const long a = a_dist(rng), b = a_dist(rng), n = 2 * n_dist(rng) + 1;
        CHECK(jacobi(a, n) == gmp_jacobi(a, n));
        CHECK(jacobi(a * b, n) == jacobi(a, n) * jacobi(b, n));
    }
    for (long p = 3; p < 200; p += 2) {
        if (!nt::is_prime(static_cast<std::uint64_t>(p))) continue;
        for (long a = 0; a < p; ++a) {
            Integer e;
            const Integer base = a;
            mpz_powm_ui(e.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>((p - 1) / 2), Integer(p).get_mpz_t());
            const long expected = e == p - 1 ? -1 : e.get_si();
            CHECK(jacobi(a, p) == expected);
        }
    }
}

TEST_CASE("vp examples") {
    CHECK(vp(18, 3) == 2);
    CHECK(vp(make_rational(1, 4), 2) == -2);
    CHECK(vp(make_rational(1225, 16384), 5) == 2);
    CHECK(vp(-7, 5) == 0);
    CHECK_THROWS_AS(vp(0, 5), ZeroValuation);
    CHECK_THROWS_AS(vp(3, 4), InvalidParameter);
}

TEST_CASE("residue_mod examples") {
    CHECK(residue_mod(make_rational(1, 4), 5, 2) == 19);
    CHECK(residue_mod(make_rational(9, 64), 5, 2) == 6);
    CHECK(residue_mod(make_rational(1, 3), 2, 3) == 3);
    CHECK(residue_mod(-1, 7, 2) == 48);
    CHECK_THROWS_AS(residue_mod(make_rational(1, 5), 5, 2), NotPIntegral);
    CHECK_THROWS_AS(residue_mod(1, 5, 0), InvalidParameter);
}

TEST_CASE("residue_mod reduces consistently") {
    std::mt19937 rng(37);
    std::uniform_int_distribution<long> num(-10000, 10000), den(1, 10000);
    for (long p : {3L, 5L, 7L, 11L}) {
        for (int trial = 0; trial < 300; ++trial) {
            const Rational x = make_rational(num(rng), den(rng));
            if (mpz_divisible_ui_p(x.get_den_mpz_t(), static_cast<unsigned long>(p))) continue;
            for (long e = 1; e <= 4; ++e) {
                const Integer r = residue_mod(x, p, e);
                CHECK(r % p == residue_mod(x, p, 1));
                Integer pe;
                mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
                // r * den == num (mod p^e)
                Integer lhs = r * x.get_den() - x.get_num();
                CHECK(mpz_divisible_p(lhs.get_mpz_t(), pe.get_mpz_t()) != 0);
            }
        }
    }
}

TEST_CASE("least_residue examples") {
    CHECK(least_residue(make_rational(-1, 2), 3) == 1);
    CHECK(least_residue(make_rational(-1, 3), 7) == 2);
    CHECK(least_residue(0, 11) == 0);
}

TEST_CASE("binom_rational examples") {
    CHECK(binom_rational(make_rational(-1, 2), 0) == 1);
    CHECK(binom_rational(make_rational(-1, 2), 2) == make_rational(3, 8));
    CHECK(binom_rational(5, 2) == 10);
    CHECK(binom_rational(5, 7) == 0);
    CHECK_THROWS_AS(binom_rational(1, -1), InvalidParameter);
}

TEST_CASE("central binomial bridge") {
    Rational power = 1;
    for (long k = 0; k <= 30; ++k) {
        CHECK(binom_rational(make_rational(-1, 2), k) * power == Rational(Integer(std::to_string(central_binomial(k)))));
        power *= -4;
    }
}

TEST_CASE("check_mortenson examples") {
    const CongruenceInstance five = check_mortenson(5, 1);
    CHECK(five.passed);
    CHECK(five.lhs_residue == 1);
    CHECK(five.rhs_residue == 1);
    // 1 + 1/4 + 9/64 + 25/256 + 1225/16384 reduced mod 25 by hand.
    const Rational exact = Rational(1) + make_rational(1, 4) + make_rational(9, 64) + make_rational(25, 256) +
                           make_rational(1225, 16384);
    CHECK(residue_mod(exact, 5, 2) == 1);
    const CongruenceInstance seven = check_mortenson(7, 1);
    CHECK(seven.passed);
    CHECK(seven.rhs_residue == 48);
    const CongruenceInstance v2 = check_mortenson(5, 2);
    CHECK(v2.passed);
    CHECK(v2.rhs_residue == 24);
    CHECK_THROWS_AS(check_mortenson(3, 1), InvalidParameter);
    CHECK_THROWS_AS(check_mortenson(9, 1), InvalidParameter);
    CHECK_THROWS_AS(check_mortenson(5, 5), InvalidParameter);
}

TEST_CASE("check_mortenson over primes up to 97") {
    for (long p : kPrimesTo97)
        for (int v = 1; v <= 4; ++v) CHECK_MESSAGE(check_mortenson(p, v).passed, "p = " << p << " variant " << v);
}

TEST_CASE("check_sun_liu examples") {
    const CongruenceInstance half = check_sun_liu(5, 1, make_rational(1, 2));
    CHECK(half.passed);
    CHECK(half.lhs_residue == 1);
    CHECK(half.rhs_residue == 1);
    for (long p : {3L, 5L, 7L}) {
        const CongruenceInstance zero = check_sun_liu(p, 1, 0);
        CHECK(zero.passed);
        CHECK(zero.lhs_residue == 1);
    }
    CHECK(check_sun_liu(5, 2, make_rational(1, 3)).passed);
    CHECK_THROWS_AS(check_sun_liu(5, 1, make_rational(1, 5)), NotPIntegral);
    CHECK_THROWS_AS(check_sun_liu(5, 2, make_rational(2, 3)), HypothesisViolation);
    CHECK_THROWS_AS(check_sun_liu(2, 1, make_rational(1, 3)), HypothesisViolation);
}

TEST_CASE("check_sun_liu grid") {
    const std::vector<Rational> xs = {make_rational(1, 2), make_rational(1, 3), make_rational(2, 3), make_rational(1, 4),
                                      make_rational(3, 4), make_rational(1, 5), make_rational(2, 5)};
    for (long p : {5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L})
        for (const auto& x : xs) {
            if (mpz_divisible_ui_p(x.get_den_mpz_t(), static_cast<unsigned long>(p))) continue;
            CHECK_MESSAGE(check_sun_liu(p, 1, x).passed, "p = " << p << " x = " << x.get_str());
        }
    for (long n : {2L, 3L, 4L})
        for (long p : {5L, 7L, 11L, 13L})
            for (const auto& x : {make_rational(1, 2), make_rational(1, 3), make_rational(1, 4), make_rational(1, 6)})
                CHECK_MESSAGE(check_sun_liu(p, n, x).passed, "p = " << p << " n = " << n << " x = " << x.get_str());
}

TEST_CASE("check_dwork_padic examples") {
    const DworkPadicResult a = check_dwork_padic(3, 2, 2, 1);
    CHECK(a.passed);
    CHECK((!a.diff_valuation || *a.diff_valuation >= 4));
    CHECK(a.inverse_binomial_valuation >= 0);
    CHECK(check_dwork_padic(5, 2, 4, 1).passed);
    CHECK_THROWS_AS(check_dwork_padic(3, 2, 2, 2), InvalidParameter);
    CHECK_THROWS_AS(check_dwork_padic(5, 2, 3, 1), InvalidParameter);
    CHECK_THROWS_AS(check_dwork_padic(5, 1, 2, 1), InvalidParameter);
    CHECK(to_string(Valuation{}) == "inf");
    CHECK(to_string(Valuation{3}) == "3");
}
