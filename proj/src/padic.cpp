#include "qdwork/padic.hpp"

#include <algorithm>
#include <array>

#include "qdwork/errors.hpp"
#include "qdwork/numtheory.hpp"

namespace qdwork {

int jacobi(const Integer& a_in, const Integer& n_in) {
    if (n_in < 1 || mpz_even_p(n_in.get_mpz_t()))
        throw InvalidParameter("Jacobi symbol needs an odd positive modulus");
    Integer n = n_in;
    Integer a = a_in % n;
    if (a < 0) a += n;
    int result = 1;
    while (a != 0) {
        while (mpz_even_p(a.get_mpz_t())) {
            a /= 2;
            const unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), 8);
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

long vp(const Rational& x, long p) {
    if (x == 0) throw ZeroValuation();
    if (p < 2 || !nt::is_prime(static_cast<std::uint64_t>(p)))
        throw InvalidParameter("valuation needs a prime, got " + std::to_string(p));
    const Integer prime = p;
    Integer scratch;
    const long up = static_cast<long>(mpz_remove(scratch.get_mpz_t(), x.get_num_mpz_t(), prime.get_mpz_t()));
    const long down = static_cast<long>(mpz_remove(scratch.get_mpz_t(), x.get_den_mpz_t(), prime.get_mpz_t()));
    return up - down;
}

namespace {

Integer residue_modulo(const Rational& x, const Integer& modulus) {
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), x.get_den_mpz_t(), modulus.get_mpz_t()) == 0) {
        if (modulus == 1) return 0;
        throw NotPIntegral("denominator of " + x.get_str() + " is not invertible modulo " +
                           modulus.get_str());
    }
    Integer r = x.get_num() * inv;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

Integer prime_power(long p, long e) {
    Integer m;
    mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
    return m;
}

}  // namespace

Integer residue_mod(const Rational& x, long p, long e) {
    if (e < 1) throw InvalidParameter("residue exponent must be positive");
    if (p < 2 || !nt::is_prime(static_cast<std::uint64_t>(p)))
        throw InvalidParameter("residue_mod needs a prime, got " + std::to_string(p));
    return residue_modulo(x, prime_power(p, e));
}

Integer least_residue(const Rational& x, long modulus) {
    if (modulus < 1) throw InvalidParameter("modulus must be positive");
    return residue_modulo(x, Integer(modulus));
}

Rational binom_rational(const Rational& x, long k) {
    if (k < 0) throw InvalidParameter("binomial index must be nonnegative");
    Rational r = 1;
    for (long i = 0; i < k; ++i) {
        r *= x - i;
        r /= i + 1;
    }
    return r;
}

namespace {

void require_prime(long p, const char* what) {
    if (p < 2 || !nt::is_prime(static_cast<std::uint64_t>(p)))
        throw InvalidParameter(std::string(what) + " needs a prime, got " + std::to_string(p));
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// sum_{k<count} C(-x,k) C(x-1,k), built from the term ratio
// (-x-k)(x-1-k)/(k+1)^2.
Rational sun_partial_sum(const Rational& x, long count) {
    Rational term = 1, sum = 0;
    for (long k = 0; k < count; ++k) {
        sum += term;
        term *= (-x - k) * (x - 1 - k);
        term /= Rational((k + 1) * (k + 1));
    }
    return sum;
}

CongruenceInstance compare(std::string check, std::string label, long p, long e, const Rational& lhs,
                           const Rational& rhs) {
    CongruenceInstance out;
    out.check = std::move(check);
    out.label = std::move(label);
    out.prime = p;
    out.exponent = e;
    out.lhs_residue = residue_mod(lhs, p, e);
    out.rhs_residue = residue_mod(rhs, p, e);
    out.passed = out.lhs_residue == out.rhs_residue;
    return out;
}

}  // namespace

CongruenceInstance check_mortenson(long p, int variant) {
    require_prime(p, "check_mortenson");
    if (p <= 3) throw InvalidParameter("check_mortenson needs p > 3");
    if (variant < 1 || variant > 4) throw InvalidParameter("Mortenson variant must be 1..4");

    static constexpr std::array<long, 4> kBase = {16, 27, 64, 432};
    const Integer base = kBase[static_cast<std::size_t>(variant - 1)];
    Rational sum = 0;
    Integer power = 1;
    for (long k = 0; k < p; ++k) {
        const auto uk = static_cast<unsigned long>(k);
        Integer num;
        switch (variant) {
            case 1:
                num = binomial(2 * uk, uk) * binomial(2 * uk, uk);
                break;
            case 2:
                num = binomial(3 * uk, uk) * binomial(2 * uk, uk);
                break;
            case 3:
                num = binomial(4 * uk, 2 * uk) * binomial(2 * uk, uk);
                break;
            default:
                num = binomial(6 * uk, 3 * uk) * binomial(3 * uk, uk);
                break;
        }
        Rational term(num, power);
        term.canonicalize();
        sum += term;
        power *= base;
    }
    int sign = 0;
    switch (variant) {
        case 1:
        case 4:
            sign = jacobi(-1, p);
            break;
        case 2:
            sign = jacobi(p, 3);
            break;
        default:
            sign = jacobi(-2, p);
            break;
    }
    return compare("mortenson", "variant=" + std::to_string(variant), p, 2, sum, Rational(sign));
}

CongruenceInstance check_sun_liu(long p, long n, const Rational& x) {
    require_prime(p, "check_sun_liu");
    if (p == 2) throw HypothesisViolation("check_sun_liu needs an odd prime");
    if (n < 1) throw InvalidParameter("check_sun_liu needs n >= 1");
    if (x != 0 && vp(x, p) < 0)
        throw NotPIntegral(x.get_str() + " is not " + std::to_string(p) + "-integral");
    if (n > 1) {
        static const std::array<Rational, 4> kLiu = {Rational(1, 2), Rational(1, 3), Rational(1, 4),
                                                     Rational(1, 6)};
        if (std::find(kLiu.begin(), kLiu.end(), x) == kLiu.end())
            throw HypothesisViolation("n > 1 requires x in {1/2, 1/3, 1/4, 1/6}");
    }
    const Rational lhs = sun_partial_sum(x, p * n);
    const Integer exponent = least_residue(-x, p);
    const Rational rhs = (mpz_odd_p(exponent.get_mpz_t()) ? -1 : 1) * sun_partial_sum(x, n);
    return compare("sun-liu", "n=" + std::to_string(n) + ",x=" + x.get_str(), p, 2, lhs, rhs);
}

DworkPadicResult check_dwork_padic(long p, long r, long m, long s) {
    require_prime(p, "check_dwork_padic");
    if (r < 2) throw InvalidParameter("check_dwork_padic needs r >= 2");
    if (m < 1 || s < 1 || s >= m) throw InvalidParameter("check_dwork_padic needs 0 < s < m");
    if (m % p == 0) throw InvalidParameter("check_dwork_padic needs gcd(m, p) = 1");
    if (p % m != 1 % m) throw InvalidParameter("check_dwork_padic needs p == 1 (mod m)");

    const long outer = nt::checked_pow(p, static_cast<unsigned>(r));
    const long inner = outer / p;
    const Rational a = make_rational(-s, m), b = make_rational(-(m - s), m);
    // sum_{k<count} C(a,k) C(b,k) for both lengths in one pass.
    Rational term = 1, sum = 0, inner_sum = 0, boundary_term = 0;
    for (long k = 0; k < outer; ++k) {
        if (k == inner) {
            inner_sum = sum;
            boundary_term = term;
        }
        sum += term;
        term *= (a - k) * (b - k);
        term /= Rational((k + 1) * (k + 1));
    }
    const Integer sign_exp = least_residue(a, p);
    const Rational diff = sum - (mpz_odd_p(sign_exp.get_mpz_t()) ? -1 : 1) * inner_sum;

    DworkPadicResult out;
    out.inverse_binomial_valuation = -vp(boundary_term, p);
    if (diff != 0) {
        out.diff_valuation = vp(diff, p);
        Rational w = diff / boundary_term;
        w /= Rational(prime_power(p, 2 * r));
        out.w_valuation = vp(w, p);
    }
    const bool diff_ok = !out.diff_valuation || *out.diff_valuation >= 2 * r;
    const bool w_ok = !out.w_valuation || *out.w_valuation >= 0;
    out.passed = diff_ok && w_ok;
    return out;
}

std::string to_string(const Valuation& v) { return v ? std::to_string(*v) : std::string("inf"); }

}  // namespace qdwork
