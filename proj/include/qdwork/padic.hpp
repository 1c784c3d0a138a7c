#ifndef QDWORK_PADIC_HPP
#define QDWORK_PADIC_HPP

#include <optional>
#include <string>

#include "qdwork/polyring.hpp"

namespace qdwork {

/// Outcome of comparing two p-integral rationals modulo p^exponent.
struct CongruenceInstance {
    std::string check;  // "mortenson", "sun-liu"
    std::string label;  // parameters beyond the prime, e.g. "variant=2"
    long prime = 0;
    long exponent = 2;
    Integer lhs_residue;
    Integer rhs_residue;
    bool passed = false;

    friend bool operator==(const CongruenceInstance&, const CongruenceInstance&) = default;
};

/// Jacobi symbol (a/n) for odd n >= 1; InvalidParameter otherwise.
int jacobi(const Integer& a, const Integer& n);

/// p-adic valuation of a nonzero rational; ZeroValuation for 0.
long vp(const Rational& x, long p);

/// Residue of a p-integral rational in [0, p^e); NotPIntegral otherwise.
Integer residue_mod(const Rational& x, long p, long e);

/// Least nonnegative residue of x modulo `modulus` for x whose denominator is
/// invertible modulo `modulus`; NotPIntegral otherwise.
Integer least_residue(const Rational& x, long modulus);

/// x (x-1) ... (x-k+1) / k!
Rational binom_rational(const Rational& x, long k);

/// Classical supercongruences modulo p^2, variants 1-4:
///   sum_{k<p} C(2k,k)^2 / 16^k            == (-1/p)
///   sum_{k<p} C(3k,k) C(2k,k) / 27^k      == (p/3)
///   sum_{k<p} C(4k,2k) C(2k,k) / 64^k     == (-2/p)
///   sum_{k<p} C(6k,3k) C(3k,k) / 432^k    == (-1/p)
CongruenceInstance check_mortenson(long p, int variant);

/// sum_{k<pn} C(-x,k) C(x-1,k) == (-1)^{<-x>_p} sum_{k<n} C(-x,k) C(x-1,k)  (mod p^2).
/// Requires an odd prime p; for n > 1, x must lie in {1/2, 1/3, 1/4, 1/6}.
CongruenceInstance check_sun_liu(long p, long n, const Rational& x);

/// Valuation that may be +infinity (nullopt) when the value is zero.
using Valuation = std::optional<long>;

struct DworkPadicResult {
    Valuation diff_valuation;
    Valuation w_valuation;
    /// Valuation of 1 / (C(-s/m, p^{r-1}) C(-(m-s)/m, p^{r-1})); must be >= 0.
    long inverse_binomial_valuation = 0;
    bool passed = false;
};

/// Dwork-type p-adic integrality at q = 1 for p == 1 (mod m): the truncated
/// difference is divisible by p^{2r} and the normalized quotient W is
/// p-integral.
DworkPadicResult check_dwork_padic(long p, long r, long m, long s);

std::string to_string(const Valuation& v);

}  // namespace qdwork

#endif  // QDWORK_PADIC_HPP
