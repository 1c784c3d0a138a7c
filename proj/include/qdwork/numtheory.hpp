#ifndef QDWORK_NUMTHEORY_HPP
#define QDWORK_NUMTHEORY_HPP

// Small-integer helpers shared by the polynomial core and the drivers.
// Everything here works on machine integers; trial division is plenty for
// the sizes the verifiers touch.

#include <cstdint>
#include <utility>
#include <vector>

namespace qdwork::nt {

bool is_prime(std::uint64_t n);

/// Prime factorization as (prime, exponent) pairs in increasing order.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

/// Sorted list of the positive divisors of n (n >= 1).
std::vector<std::uint64_t> divisors(std::uint64_t n);

int mobius(std::uint64_t n);

std::uint64_t totient(std::uint64_t n);

/// If n = p^k with p prime and k >= 1, returns p; otherwise 0.
std::uint64_t prime_power_base(std::uint64_t n);

/// base^exp, throwing InvalidParameter on 64-bit overflow.
std::int64_t checked_pow(std::int64_t base, unsigned exp);

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Least nonnegative residue of x modulo m (m >= 1).
std::int64_t mod(std::int64_t x, std::int64_t m);

/// Inverse of a modulo m; InvalidParameter when gcd(a, m) != 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

}  // namespace qdwork::nt

#endif  // QDWORK_NUMTHEORY_HPP
