#include "qdwork/numtheory.hpp"

#include <limits>
#include <numeric>
#include <string>

#include "qdwork/errors.hpp"

namespace qdwork::nt {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t p = 2; p <= n / p; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d <= n / d; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

int mobius(std::uint64_t n) {
    int sign = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

std::uint64_t totient(std::uint64_t n) {
    std::uint64_t phi = n;
    for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

std::uint64_t prime_power_base(std::uint64_t n) {
    auto f = factorize(n);
    return f.size() == 1 ? f.front().first : 0;
}

std::int64_t checked_pow(std::int64_t base, unsigned exp) {
    std::int64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (__builtin_mul_overflow(r, base, &r))
            throw InvalidParameter("integer overflow computing " + std::to_string(base) + "^" +
                                   std::to_string(exp));
    }
    return r;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t mod(std::int64_t x, std::int64_t m) {
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
    if (m == 1) return 0;
    std::int64_t old_r = mod(a, m), r = m, old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1)
        throw InvalidParameter(std::to_string(a) + " is not invertible modulo " + std::to_string(m));
    return mod(old_s, m);
}

}  // namespace qdwork::nt
