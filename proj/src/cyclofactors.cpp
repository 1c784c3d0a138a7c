#include "qdwork/cyclofactors.hpp"

#include <algorithm>

#include "qdwork/errors.hpp"
#include "qdwork/numtheory.hpp"

namespace qdwork {

CycloFactors CycloFactors::of_q(long exponent) {
    CycloFactors f;
    f.q_ = exponent;
    return f;
}

CycloFactors CycloFactors::of_cyclotomic(std::uint64_t d, long exponent) {
    if (d == 0) throw InvalidParameter("cyclotomic index must be positive");
    CycloFactors f;
    f.add(d, exponent);
    return f;
}

CycloFactors CycloFactors::of_q_power_minus_one(std::uint64_t j, long exponent) {
    if (j == 0) throw InvalidParameter("q^0 - 1 vanishes");
    CycloFactors f;
    for (std::uint64_t d : nt::divisors(j)) f.add(d, exponent);
    return f;
}

long CycloFactors::exponent(std::uint64_t d) const {
    auto it = phi_.find(d);
    return it == phi_.end() ? 0 : it->second;
}

void CycloFactors::add(std::uint64_t d, long e) {
    if (e == 0) return;
    auto [it, inserted] = phi_.try_emplace(d, e);
    if (!inserted && (it->second += e) == 0) phi_.erase(it);
}

bool CycloFactors::nonnegative() const {
    return q_ >= 0 && std::all_of(phi_.begin(), phi_.end(), [](const auto& kv) { return kv.second > 0; });
}

long CycloFactors::degree() const {
    long deg = q_;
    for (auto [d, e] : phi_) deg += e * static_cast<long>(nt::totient(d));
    return deg;
}

CycloFactors& CycloFactors::operator*=(const CycloFactors& o) {
    q_ += o.q_;
    for (auto [d, e] : o.phi_) add(d, e);
    return *this;
}

CycloFactors& CycloFactors::operator/=(const CycloFactors& o) {
    q_ -= o.q_;
    for (auto [d, e] : o.phi_) add(d, -e);
    return *this;
}

CycloFactors CycloFactors::lcm(const CycloFactors& a, const CycloFactors& b) {
    CycloFactors out = a;
    out.q_ = std::max(a.q_, b.q_);
    for (auto [d, e] : b.phi_) {
        long cur = out.exponent(d);
        if (e > cur) out.add(d, e - cur);
    }
    return out;
}

std::map<std::uint64_t, long> CycloFactors::binomial_exponents() const {
    // Phi_d = prod_{c | d} (q^c - 1)^{mu(d/c)}
    std::map<std::uint64_t, long> g;
    for (auto [d, e] : phi_) {
        for (std::uint64_t c : nt::divisors(d)) {
            int mu = nt::mobius(d / c);
            if (mu == 0) continue;
            auto [it, inserted] = g.try_emplace(c, 0);
            if ((it->second += mu * e) == 0) g.erase(it);
        }
    }
    return g;
}

void CycloFactors::apply_to(Poly& p) const {
    if (p.is_zero()) return;
    const auto g = binomial_exponents();
    // Multiplications first so every intermediate division is exact.
    for (auto [c, e] : g)
        for (long i = 0; i < e; ++i) p.mul_q_power_minus_one(c);
    for (auto [c, e] : g)
        for (long i = 0; i < -e; ++i) p.div_q_power_minus_one(c);
    if (q_ > 0) p.shift_up(static_cast<std::size_t>(q_));
    if (q_ < 0) p.shift_down(static_cast<std::size_t>(-q_));
}

Poly CycloFactors::to_poly() const {
    Poly p(1);
    apply_to(p);
    return p;
}

bool divisible_by_cyclotomic(const Poly& p, std::uint64_t d) {
    if (p.is_zero()) return true;
    // Reduce modulo q^d - 1 (a multiple of Phi_d), then modulo Phi_d.
    const auto& c = p.numerators();
    std::vector<Integer> folded(std::min<std::size_t>(d, c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) folded[i % d] += c[i];
    const auto& phi = cyclotomic(d).numerators();
    const std::size_t deg = phi.size() - 1;
    std::vector<std::pair<std::size_t, Integer>> sparse;
    for (std::size_t i = 0; i < deg; ++i)
        if (phi[i] != 0) sparse.emplace_back(i, phi[i]);
    for (std::size_t k = folded.size(); k-- > deg;) {
        if (folded[k] == 0) continue;
        const Integer t = folded[k];
        for (const auto& [i, v] : sparse) {
            if (v == 1)
                folded[k - deg + i] -= t;
            else if (v == -1)
                folded[k - deg + i] += t;
            else
                folded[k - deg + i] -= t * v;
        }
        folded[k] = 0;
    }
    return std::all_of(folded.begin(), folded.end(), [](const Integer& x) { return x == 0; });
}

void cancel_common_factors(Poly& num, CycloFactors& den) {
    if (num.is_zero()) {
        den = CycloFactors{};
        return;
    }
    if (den.q_exponent() > 0) {
        const long k = std::min<long>(den.q_exponent(), static_cast<long>(num.low_degree()));
        if (k > 0) {
            num.shift_down(static_cast<std::size_t>(k));
            den /= CycloFactors::of_q(k);
        }
    }
    const auto phi = den.phi();
    for (auto [d, e] : phi) {
        long removed = 0;
        while (removed < e && num.degree() >= 1 && divisible_by_cyclotomic(num, d)) {
            CycloFactors::of_cyclotomic(d, -1).apply_to(num);
            ++removed;
        }
        if (removed > 0) den /= CycloFactors::of_cyclotomic(d, removed);
    }
}

}  // namespace qdwork
