#ifndef QDWORK_POLYRING_HPP
#define QDWORK_POLYRING_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace qdwork {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in canonical form; den must be nonzero.
Rational make_rational(long num, long den);

/// Dense univariate polynomial in q over the rationals.
///
/// Stored as integer numerators sharing one positive denominator; the
/// denominator is coprime to the content of the numerators, so the
/// representation is canonical and `coeff(i)` is always a reduced fraction.
/// Integer polynomials (denominator 1) never touch rational arithmetic,
/// which keeps the sparse-factor kernels below cheap.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c);  // NOLINT: constants convert implicitly
    Poly(long c) : Poly(Rational(c)) {}  // NOLINT
    explicit Poly(std::vector<Integer> numerators, Integer denominator = 1);

    static Poly from_rationals(const std::vector<Rational>& coeffs);
    /// c * q^k
    static Poly monomial(std::size_t k, const Rational& c = 1);
    /// q^j - 1
    static Poly q_power_minus_one(std::size_t j);

    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    std::size_t size() const noexcept { return c_.size(); }
    Rational coeff(std::size_t i) const;
    Rational leading_coeff() const;
    std::vector<Rational> coefficients() const;
    const std::vector<Integer>& numerators() const noexcept { return c_; }
    const Integer& denominator() const noexcept { return den_; }
    bool is_integral() const { return den_ == 1; }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == den_; }
    /// Exponent of the largest power of q dividing the polynomial (0 for zero).
    std::size_t low_degree() const noexcept;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.den_ == b.den_ && a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Sparse kernels, O(size) each.
    Poly& mul_q_power_minus_one(std::size_t j);
    /// Exact division by q^j - 1; throws NonExactDivision on a nonzero remainder.
    Poly& div_q_power_minus_one(std::size_t j);
    /// Multiply by q^k.
    Poly& shift_up(std::size_t k);
    /// Exact division by q^k.
    Poly& shift_down(std::size_t k);

    /// Same polynomial scaled to leading coefficient 1; zero stays zero.
    Poly monic() const;
    /// Integer numerators divided by their content, leading coefficient positive.
    Poly primitive_part() const;

private:
    void normalize();

    std::vector<Integer> c_;
    Integer den_ = 1;
};

Poly poly_mul(const Poly& a, const Poly& b);

/// Quotient and remainder over Q; DivisionByZero when b = 0.
std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b);

/// Quotient of an exact division; NonExactDivision or DivisionByZero otherwise.
Poly poly_divrem_exact(const Poly& a, const Poly& b);

bool poly_divides(const Poly& divisor, const Poly& a);

/// Monic gcd over Q; BothZero when both inputs vanish.
Poly poly_gcd(const Poly& a, const Poly& b);

Rational poly_eval(const Poly& a, const Rational& x);

/// n-th cyclotomic polynomial, memoized; InvalidParameter for n = 0.
const Poly& cyclotomic(std::uint64_t n);

/// Descending powers with explicit monomials, e.g. "q^6 + q^3 + 1".
std::string to_string(const Poly& p);
std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace qdwork

#endif  // QDWORK_POLYRING_HPP
