#ifndef QDWORK_VERIFIER_HPP
#define QDWORK_VERIFIER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdwork/polyring.hpp"

namespace qdwork {

enum class Theorem { Thm1, Thm2, Lemma21, Param1Roots, Param2Roots, GZd2 };

std::string to_string(Theorem t);
/// Inverse of to_string; InvalidParameter for unknown names.
Theorem theorem_from_string(const std::string& name);

struct TheoremParams {
    long m = 0;
    long s = 0;
    long n = 0;
    std::optional<long> r;  // absent for Lemma21

    friend bool operator==(const TheoremParams&, const TheoremParams&) = default;
};

/// n odd, n > 1, 0 < s < m, n == 1 (mod m).
bool is_class1(const TheoremParams& p);
/// n odd, n > 1, 0 < s < m, n == -1 (mod m).
bool is_class2(const TheoremParams& p);

struct ModulusFactor {
    std::uint64_t index = 0;  // cyclotomic index d of Phi_d
    long multiplicity = 0;

    friend bool operator==(const ModulusFactor&, const ModulusFactor&) = default;
};

struct VerificationReport {
    Theorem theorem = Theorem::Thm1;
    TheoremParams params;
    std::vector<ModulusFactor> modulus_factors;
    bool passed = false;
    std::optional<std::string> failure_witness;  // present iff !passed
    long elapsed_ms = 0;
    bool skipped = false;  // scan entries rejected as invalid parameters

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct DriverOptions {
    /// Largest n^r a driver accepts (summation length of the long side).
    long size_guard = 200;
};

/// Factor list [(n^j, 2)] for j = 1..r.
std::vector<ModulusFactor> modulus_thm1_factors(long n, long r);
/// prod_{j=1}^r Phi_{n^j}(q)^2.
Poly modulus_thm1(long n, long r);

/// Multiplies out a factor list.
Poly modulus_product(const std::vector<ModulusFactor>& factors);

/// <-s/m>_n for n == 1 (mod m), i.e. s (n - 1) / m.
long class1_sign_exponent(long m, long s, long n);

VerificationReport verify_thm1(const TheoremParams& params, const DriverOptions& opts = {});
VerificationReport verify_thm2(const TheoremParams& params, const DriverOptions& opts = {});
VerificationReport verify_lemma21(long m, long n, long s, const DriverOptions& opts = {});
/// variant 1: parameter roots behind the n == 1 (mod m) congruence;
/// variant 2: those behind the n == -1 (mod m) congruence.
VerificationReport verify_param_roots(int variant, const TheoremParams& params,
                                      const DriverOptions& opts = {});
VerificationReport verify_gz_d2(long n, long r, const DriverOptions& opts = {});

struct MultipleCount {
    long counted = 0;
    long expected = 0;
};

/// Multiples of n^j, with multiplicity, among {s n (m i + 1)} and
/// {(m - s) n (m i + 1)} against floor((n^{r-j}-1)/s) + floor((n^{r-j}-1)/(m-s)) + 2.
MultipleCount count_multiples(long m, long s, long n, long r, long j);

/// n^{j-1} (floor((n^{r-j}-1)/s) m + 1) <= floor((n^{r-1}-1)/s) m + 1.
bool exponent_bound_holds(long m, long s, long n, long r, long j);

}  // namespace qdwork

#endif  // QDWORK_VERIFIER_HPP
