#include "qdwork/qseries.hpp"

#include <map>
#include <string>

#include "qdwork/errors.hpp"

namespace qdwork {

namespace {

// c * q^shift * prod_j (q^j - 1)^{e_j}; the shape of every summand and of
// every ratio of consecutive summands.
struct FactorBag {
    Rational coeff = 1;
    long shift = 0;
    std::map<std::uint64_t, long> binom;
    bool zero = false;

    void bump(std::uint64_t j, long e) {
        auto [it, inserted] = binom.try_emplace(j, 0);
        if ((it->second += e) == 0) binom.erase(it);
    }

    // (1 - q^e)^power with power = +-1.
    void one_minus(long e, long power) {
        if (e > 0) {
            coeff = -coeff;
            bump(static_cast<std::uint64_t>(e), power);
        } else if (e < 0) {
            // 1 - q^{-t} = (q^t - 1) / q^t
            bump(static_cast<std::uint64_t>(-e), power);
            shift += power * e;
        } else if (power > 0) {
            zero = true;
        } else {
            throw DivisionByZero("factor 1 - q^0 in a denominator");
        }
    }

    // (1 + q^e)^power with power = +-1.
    void one_plus(long e, long power) {
        if (e == 0) {
            coeff *= power > 0 ? Rational(2) : Rational(1, 2);
            return;
        }
        // 1 + q^e = (q^{2e} - 1) / (q^e - 1), and 1 + q^{-t} = (1 + q^t) / q^t
        const long t = e > 0 ? e : -e;
        bump(static_cast<std::uint64_t>(2 * t), power);
        bump(static_cast<std::uint64_t>(t), -power);
        if (e < 0) shift -= power * t;
    }
};

// Splits a bag into numerator and denominator halves with integer
// constants: bag = (num_c q^a P) / (den_c q^b Q).
struct SplitBag {
    Integer num_c, den_c;
    long num_shift = 0, den_shift = 0;
    std::map<std::uint64_t, long> num_binom, den_binom;

    explicit SplitBag(const FactorBag& bag) : num_c(bag.coeff.get_num()), den_c(bag.coeff.get_den()) {
        (bag.shift >= 0 ? num_shift : den_shift) = bag.shift >= 0 ? bag.shift : -bag.shift;
        for (auto [j, e] : bag.binom) (e > 0 ? num_binom : den_binom)[j] = e > 0 ? e : -e;
    }
};

void apply_binomials(Poly& p, const std::map<std::uint64_t, long>& binom, long shift) {
    for (auto [j, e] : binom)
        for (long i = 0; i < e; ++i) p.mul_q_power_minus_one(j);
    p.shift_up(static_cast<std::size_t>(shift));
}

CycloFactors to_factors(const std::map<std::uint64_t, long>& binom, long shift) {
    CycloFactors f = CycloFactors::of_q(shift);
    for (auto [j, e] : binom) f *= CycloFactors::of_q_power_minus_one(j, e);
    return f;
}

RatFun to_ratfun(const FactorBag& bag) {
    if (bag.zero || bag.coeff == 0) return {};
    SplitBag split(bag);
    // Binomials on opposite sides can share cyclotomic factors; move the
    // common part out before building polynomials.
    CycloFactors num = to_factors(split.num_binom, split.num_shift);
    CycloFactors den = to_factors(split.den_binom, split.den_shift);
    CycloFactors net = num / den;
    CycloFactors top, bottom;
    if (net.q_exponent() > 0)
        top *= CycloFactors::of_q(net.q_exponent());
    else
        bottom *= CycloFactors::of_q(-net.q_exponent());
    for (auto [d, e] : net.phi())
        (e > 0 ? top : bottom) *= CycloFactors::of_cyclotomic(d, e > 0 ? e : -e);
    Poly p = top.to_poly();
    p *= bag.coeff;
    return RatFun::from_factored(std::move(p), std::move(bottom));
}

// First index i >= 0 with e + step * i = 0.
std::optional<long> zero_index(long e, long step) {
    if (e > 0 || (-e) % step != 0) return std::nullopt;
    return (-e) / step;
}

}  // namespace

void validate(const SumSpec& spec) {
    if (spec.m <= 0 || spec.s <= 0 || spec.s >= spec.m)
        throw InvalidParameter("sum needs 0 < s < m (got m=" + std::to_string(spec.m) +
                               ", s=" + std::to_string(spec.s) + ")");
    if (spec.scale <= 0) throw InvalidParameter("scale must be positive");
    if (spec.terms < 0) throw InvalidParameter("number of terms must be nonnegative");
}

RatFun qpochhammer(long e, long step, long k) {
    if (step <= 0) throw InvalidParameter("q-Pochhammer step must be positive");
    if (k < 0) throw InvalidParameter("q-Pochhammer length must be nonnegative");
    FactorBag bag;
    for (long i = 0; i < k && !bag.zero; ++i) bag.one_minus(e + step * i, 1);
    return to_ratfun(bag);
}

std::optional<long> first_vanishing_term(const SumSpec& spec) {
    validate(spec);
    const long step = spec.m * spec.scale;
    auto a = zero_index(spec.s * spec.scale + spec.subst_exponent, step);
    auto b = zero_index((spec.m - spec.s) * spec.scale - spec.subst_exponent, step);
    std::optional<long> first;
    if (a) first = *a;
    if (b && (!first || *b < *first)) first = *b;
    // Factor index i first appears in the summand k = i + 1.
    if (first) return *first + 1;
    return std::nullopt;
}

RatFun sum_term(const SumSpec& spec, long k) {
    validate(spec);
    if (k < 0) throw InvalidParameter("summand index must be nonnegative");
    const long step = spec.m * spec.scale;
    const long e1 = spec.s * spec.scale + spec.subst_exponent;
    const long e2 = (spec.m - spec.s) * spec.scale - spec.subst_exponent;
    FactorBag bag;
    bag.coeff = 2;
    for (long i = 0; i < k && !bag.zero; ++i) {
        bag.one_minus(e1 + step * i, 1);
        bag.one_minus(e2 + step * i, 1);
        bag.one_minus(step * (i + 1), -1);
        bag.one_minus(step * (i + 1), -1);
    }
    bag.shift += step * k;
    bag.one_plus(step * k, -1);
    return to_ratfun(bag);
}

RatFun sum_side(const SumSpec& spec) {
    validate(spec);
    long count = spec.terms;
    if (auto z = first_vanishing_term(spec); z && *z < count) count = *z;
    if (count == 0) return {};

    const long step = spec.m * spec.scale;
    const long e1 = spec.s * spec.scale + spec.subst_exponent;
    const long e2 = (spec.m - spec.s) * spec.scale - spec.subst_exponent;

    // Nested evaluation S_k = 1 + r_k S_{k+1}, r_k = t_{k+1} / t_k, with
    // S_{count-1} = 1. S = A / B where B is the product of the ratio
    // denominators, tracked both as a polynomial and in factored form.
    Poly a(1), b(1);
    Integer b_const = 1;
    long b_shift = 0;
    std::map<std::uint64_t, long> b_binom;
    for (long k = count - 2; k >= 0; --k) {
        FactorBag ratio;
        ratio.one_minus(e1 + step * k, 1);
        ratio.one_minus(e2 + step * k, 1);
        ratio.shift += step;
        ratio.one_plus(step * k, 1);
        ratio.one_minus(step * (k + 1), -1);
        ratio.one_minus(step * (k + 1), -1);
        ratio.one_plus(step * (k + 1), -1);
        SplitBag split(ratio);

        apply_binomials(b, split.den_binom, split.den_shift);
        b *= Rational(split.den_c);
        apply_binomials(a, split.num_binom, split.num_shift);
        a *= Rational(split.num_c);
        a += b;

        b_const *= split.den_c;
        b_shift += split.den_shift;
        for (auto [j, e] : split.den_binom) b_binom[j] += e;
    }
    a *= Rational(1) / Rational(b_const);
    return RatFun::from_factored(std::move(a), to_factors(b_binom, b_shift));
}

}  // namespace qdwork
