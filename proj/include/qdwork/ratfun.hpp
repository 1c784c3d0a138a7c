#ifndef QDWORK_RATFUN_HPP
#define QDWORK_RATFUN_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "qdwork/cyclofactors.hpp"
#include "qdwork/polyring.hpp"

namespace qdwork {

/// Rational function num/den in q, always in canonical reduced form:
/// gcd(num, den) = 1, den monic, zero stored as 0/1.
///
/// When the denominator is known to be a product of q and cyclotomic
/// polynomials the factorization is carried along; sums and products of such
/// values then skip general polynomial gcds. The factorization never affects
/// equality.
class RatFun {
public:
    RatFun() : den_(1), den_factors_(CycloFactors{}) {}
    RatFun(const Poly& p) : num_(p), den_(1), den_factors_(CycloFactors{}) {}  // NOLINT
    RatFun(const Rational& c) : RatFun(Poly(c)) {}  // NOLINT
    RatFun(long c) : RatFun(Poly(c)) {}             // NOLINT

    /// Canonical form of num/den; DivisionByZero when den = 0.
    static RatFun make(const Poly& num, const Poly& den);
    /// num / product(den) for a nonnegative factorization, reduced.
    static RatFun from_factored(Poly num, CycloFactors den);

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    const std::optional<CycloFactors>& den_factors() const noexcept { return den_factors_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    /// True when the value is a constant (den = 1 and num of degree <= 0).
    bool is_constant() const noexcept { return den_.degree() == 0 && num_.degree() <= 0; }

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

private:
    RatFun(Poly num, Poly den, std::optional<CycloFactors> factors)
        : num_(std::move(num)), den_(std::move(den)), den_factors_(std::move(factors)) {}

    Poly num_;
    Poly den_;
    std::optional<CycloFactors> den_factors_;
};

RatFun rf_new(const Poly& num, const Poly& den);

enum class ArithOp { Add, Sub, Mul, Div };
RatFun rf_arith(ArithOp op, const RatFun& a, const RatFun& b);

enum class Congruence { True, False, NonCoprimeDenominator };

/// x == 0 (mod p) in the sense of reduced numerators: with x = U/V reduced,
/// True iff p | U; NonCoprimeDenominator when gcd(V, p) != 1.
/// InvalidModulus when p is zero or constant.
Congruence rf_congruent_zero(const RatFun& x, const Poly& p);

/// b == c (mod p), i.e. rf_congruent_zero(b - c, p).
Congruence rf_congruent(const RatFun& b, const RatFun& c, const Poly& p);

std::string to_string(const RatFun& f);
std::string to_string(Congruence c);
std::ostream& operator<<(std::ostream& os, const RatFun& f);

}  // namespace qdwork

#endif  // QDWORK_RATFUN_HPP
