#ifndef QDWORK_TEST_HELPERS_HPP
#define QDWORK_TEST_HELPERS_HPP

#include <initializer_list>
#include <random>

#include "qdwork/polyring.hpp"
#include "qdwork/ratfun.hpp"

namespace qdwork::test {

// Ascending integer coefficients: P({1, 0, 2}) = 1 + 2q^2.
inline Poly P(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return Poly::from_rationals(c);
}

inline Poly random_poly(std::mt19937& rng, int max_degree, int bound) {
    std::uniform_int_distribution<int> deg(0, max_degree), coef(-bound, bound);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coef(rng);
    return Poly::from_rationals(c);
}

inline Poly random_nonzero_poly(std::mt19937& rng, int max_degree, int bound) {
    for (;;) {
        Poly p = random_poly(rng, max_degree, bound);
        if (!p.is_zero()) return p;
    }
}

}  // namespace qdwork::test

#endif  // QDWORK_TEST_HELPERS_HPP
