#ifndef QDWORK_CYCLOFACTORS_HPP
#define QDWORK_CYCLOFACTORS_HPP

#include <cstdint>
#include <map>

#include "qdwork/polyring.hpp"

namespace qdwork {

/// A product q^a * prod_d Phi_d(q)^{e_d} kept as an exponent map.
///
/// Every denominator produced by the q-series code is of this shape, so
/// lcm, cancellation and multiplication reduce to exponent bookkeeping plus
/// O(size) passes with the binomials q^j - 1 (Moebius inversion of
/// q^n - 1 = prod_{d|n} Phi_d).
class CycloFactors {
public:
    CycloFactors() = default;

    static CycloFactors of_q(long exponent);
    static CycloFactors of_cyclotomic(std::uint64_t d, long exponent = 1);
    /// q^j - 1 = prod_{d | j} Phi_d.
    static CycloFactors of_q_power_minus_one(std::uint64_t j, long exponent = 1);

    long q_exponent() const noexcept { return q_; }
    const std::map<std::uint64_t, long>& phi() const noexcept { return phi_; }
    long exponent(std::uint64_t d) const;

    bool empty() const noexcept { return q_ == 0 && phi_.empty(); }
    bool nonnegative() const;
    long degree() const;

    CycloFactors& operator*=(const CycloFactors& o);
    CycloFactors& operator/=(const CycloFactors& o);
    friend CycloFactors operator*(CycloFactors a, const CycloFactors& b) { return a *= b; }
    friend CycloFactors operator/(CycloFactors a, const CycloFactors& b) { return a /= b; }
    friend bool operator==(const CycloFactors& a, const CycloFactors& b) {
        return a.q_ == b.q_ && a.phi_ == b.phi_;
    }

    /// Exponent-wise maximum.
    static CycloFactors lcm(const CycloFactors& a, const CycloFactors& b);

    /// p *= product, exactly. Negative exponents are exact divisions and
    /// throw NonExactDivision when they do not divide.
    void apply_to(Poly& p) const;
    Poly to_poly() const;

    /// Binomial exponents g_j with product = q^a * prod_j (q^j - 1)^{g_j}.
    std::map<std::uint64_t, long> binomial_exponents() const;

private:
    void add(std::uint64_t d, long e);

    long q_ = 0;
    std::map<std::uint64_t, long> phi_;
};

/// Whether Phi_d divides p (p nonzero).
bool divisible_by_cyclotomic(const Poly& p, std::uint64_t d);

/// Divides out of num every factor it shares with den (both updated).
/// Afterwards gcd(num, product(den)) = 1 when den is nonnegative.
void cancel_common_factors(Poly& num, CycloFactors& den);

}  // namespace qdwork

#endif  // QDWORK_CYCLOFACTORS_HPP
