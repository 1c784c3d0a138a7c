#include "qdwork/ratfun.hpp"

#include <ostream>
#include <stdexcept>

#include "qdwork/errors.hpp"

namespace qdwork {

RatFun RatFun::make(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num.is_zero()) return {};
    Poly g = poly_gcd(num, den);
    Poly n = g.degree() > 0 ? poly_divrem_exact(num, g) : num;
    Poly d = g.degree() > 0 ? poly_divrem_exact(den, g) : den;
    const Rational inv = 1 / d.leading_coeff();
    n *= inv;
    d *= inv;
    std::optional<CycloFactors> factors;
    if (d.degree() == 0) factors = CycloFactors{};
    return RatFun(std::move(n), std::move(d), std::move(factors));
}

RatFun RatFun::from_factored(Poly num, CycloFactors den) {
    if (!den.nonnegative()) throw InvalidParameter("denominator factorization has negative exponents");
    if (num.is_zero()) return {};
    cancel_common_factors(num, den);
    Poly d = den.to_poly();
    return RatFun(std::move(num), std::move(d), std::move(den));
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, den_factors_); }

namespace {

RatFun add_sub(const RatFun& a, const RatFun& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    if (a.den_factors() && b.den_factors()) {
        const CycloFactors& fa = *a.den_factors();
        const CycloFactors& fb = *b.den_factors();
        CycloFactors l = CycloFactors::lcm(fa, fb);
        Poly na = a.num();
        (l / fa).apply_to(na);
        Poly nb = b.num();
        (l / fb).apply_to(nb);
        if (subtract)
            na -= nb;
        else
            na += nb;
        return RatFun::from_factored(std::move(na), std::move(l));
    }
    Poly cross = b.num() * a.den();
    Poly n = a.num() * b.den();
    if (subtract)
        n -= cross;
    else
        n += cross;
    return RatFun::make(n, a.den() * b.den());
}

}  // namespace

RatFun operator+(const RatFun& a, const RatFun& b) { return add_sub(a, b, false); }

RatFun operator-(const RatFun& a, const RatFun& b) { return add_sub(a, b, true); }

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_factors() && b.den_factors())
        return RatFun::from_factored(a.num() * b.num(), *a.den_factors() * *b.den_factors());
    return RatFun::make(a.num() * b.num(), a.den() * b.den());
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return {};
    if (b.is_constant() && a.den_factors()) {
        Poly n = a.num();
        n *= 1 / b.num().leading_coeff();
        return RatFun(std::move(n), a.den_, a.den_factors_);
    }
    return RatFun::make(a.num() * b.den(), a.den() * b.num());
}

RatFun rf_new(const Poly& num, const Poly& den) { return RatFun::make(num, den); }

RatFun rf_arith(ArithOp op, const RatFun& a, const RatFun& b) {
    switch (op) {
        case ArithOp::Add:
            return a + b;
        case ArithOp::Sub:
            return a - b;
        case ArithOp::Mul:
            return a * b;
        case ArithOp::Div:
            return a / b;
    }
    throw std::logic_error("unknown arithmetic operation");
}

Congruence rf_congruent_zero(const RatFun& x, const Poly& p) {
    if (p.degree() < 1) throw InvalidModulus("modulus must have degree >= 1");
    const bool coprime = poly_gcd(x.den(), p).degree() == 0;
    if (poly_divides(p, x.num())) {
        // gcd(U, V) = 1 and p | U force gcd(V, p) = 1.
        if (!coprime) throw std::logic_error("reduced form violated: modulus divides numerator and denominator");
        return Congruence::True;
    }
    return coprime ? Congruence::False : Congruence::NonCoprimeDenominator;
}

Congruence rf_congruent(const RatFun& b, const RatFun& c, const Poly& p) {
    return rf_congruent_zero(b - c, p);
}

std::string to_string(const RatFun& f) {
    if (f.den().degree() == 0) return to_string(f.num());
    return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

std::string to_string(Congruence c) {
    switch (c) {
        case Congruence::True:
            return "true";
        case Congruence::False:
            return "false";
        case Congruence::NonCoprimeDenominator:
            return "NonCoprimeDenominator";
    }
    return "?";
}

std::ostream& operator<<(std::ostream& os, const RatFun& f) { return os << to_string(f); }

}  // namespace qdwork
