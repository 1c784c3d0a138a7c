#include "qdwork/verifier.hpp"

#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qdwork/errors.hpp"
#include "qdwork/numtheory.hpp"
#include "qdwork/padic.hpp"
#include "qdwork/qseries.hpp"
#include "qdwork/ratfun.hpp"

namespace qdwork {

std::string to_string(Theorem t) {
    switch (t) {
        case Theorem::Thm1:
            return "thm1";
        case Theorem::Thm2:
            return "thm2";
        case Theorem::Lemma21:
            return "lemma21";
        case Theorem::Param1Roots:
            return "param1";
        case Theorem::Param2Roots:
            return "param2";
        case Theorem::GZd2:
            return "gz-d2";
    }
    return "?";
}

Theorem theorem_from_string(const std::string& name) {
    for (Theorem t : {Theorem::Thm1, Theorem::Thm2, Theorem::Lemma21, Theorem::Param1Roots,
                      Theorem::Param2Roots, Theorem::GZd2})
        if (to_string(t) == name) return t;
    throw InvalidParameter("unknown theorem '" + name + "'");
}

namespace {

bool basic_shape(const TheoremParams& p) {
    return p.n > 1 && p.n % 2 != 0 && p.m > 0 && p.s > 0 && p.s < p.m;
}

std::string describe(const TheoremParams& p) {
    std::ostringstream os;
    os << "(m=" << p.m << ", s=" << p.s << ", n=" << p.n;
    if (p.r) os << ", r=" << *p.r;
    os << ")";
    return os.str();
}

long require_r(const TheoremParams& p, long min_r) {
    if (!p.r || *p.r < min_r)
        throw InvalidParameter("r must be >= " + std::to_string(min_r) + " for " + describe(p));
    return *p.r;
}

long guarded_power(long n, long r, const DriverOptions& opts) {
    const long len = nt::checked_pow(n, static_cast<unsigned>(r));
    if (len > opts.size_guard)
        throw SizeGuardExceeded("n^r = " + std::to_string(len) + " exceeds the size guard " +
                                std::to_string(opts.size_guard));
    return len;
}

class Stopwatch {
public:
    long elapsed_ms() const {
        return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                     std::chrono::steady_clock::now() - start_)
                                     .count());
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string leading_coefficients(const Poly& p, std::size_t count = 4) {
    std::ostringstream os;
    os << "deg " << p.degree() << ", leading [";
    const auto coeffs = p.coefficients();
    for (std::size_t i = 0; i < count && i < coeffs.size(); ++i) {
        std::string c = coeffs[coeffs.size() - 1 - i].get_str();
        if (c.size() > 24) c = c.substr(0, 21) + "...";
        os << (i ? ", " : "") << c;
    }
    os << "]";
    return os.str();
}

// Checks diff == 0 modulo every Phi_d^e of the list and, independently,
// modulo their product; the two routes must agree.
std::optional<std::string> check_modulo_factors(const RatFun& diff,
                                                const std::vector<ModulusFactor>& factors) {
    std::optional<std::string> witness;
    for (const auto& f : factors) {
        const CycloFactors power = CycloFactors::of_cyclotomic(f.index, f.multiplicity);
        const Poly modulus = power.to_poly();
        const Congruence c = rf_congruent_zero(diff, modulus);
        if (c == Congruence::True) continue;
        std::ostringstream os;
        os << "Phi_" << f.index << "^" << f.multiplicity << ": ";
        if (c == Congruence::NonCoprimeDenominator)
            os << "NonCoprimeDenominator (Phi_" << f.index << " divides the reduced denominator)";
        else
            os << "residue of reduced numerator " << leading_coefficients(poly_divrem(diff.num(), modulus).second);
        witness = os.str();
        break;
    }
    if (!factors.empty()) {
        const bool whole = rf_congruent_zero(diff, modulus_product(factors)) == Congruence::True;
        if (whole != !witness)
            throw std::logic_error("congruence modulo the product disagrees with the per-factor check");
    }
    return witness;
}

VerificationReport finish(VerificationReport rep, std::optional<std::string> witness, const Stopwatch& sw) {
    rep.passed = !witness;
    rep.failure_witness = std::move(witness);
    rep.elapsed_ms = sw.elapsed_ms();
    return rep;
}

RatFun signed_value(int sign, const RatFun& x) { return sign < 0 ? -x : x; }

int parity_sign(long e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

bool is_class1(const TheoremParams& p) { return basic_shape(p) && nt::mod(p.n, p.m) == nt::mod(1, p.m); }

bool is_class2(const TheoremParams& p) { return basic_shape(p) && nt::mod(p.n, p.m) == nt::mod(-1, p.m); }

std::vector<ModulusFactor> modulus_thm1_factors(long n, long r) {
    if (n <= 1 || r < 1) throw InvalidParameter("modulus needs n > 1 and r >= 1");
    std::vector<ModulusFactor> out;
    for (long j = 1; j <= r; ++j)
        out.push_back({static_cast<std::uint64_t>(nt::checked_pow(n, static_cast<unsigned>(j))), 2});
    return out;
}

Poly modulus_product(const std::vector<ModulusFactor>& factors) {
    CycloFactors f;
    for (const auto& mf : factors) f *= CycloFactors::of_cyclotomic(mf.index, mf.multiplicity);
    return f.to_poly();
}

Poly modulus_thm1(long n, long r) { return modulus_product(modulus_thm1_factors(n, r)); }

long class1_sign_exponent(long m, long s, long n) {
    const TheoremParams p{m, s, n, std::nullopt};
    if (!is_class1(p)) throw InvalidParameter("closed-form residue needs n == 1 (mod m), n odd, 0 < s < m");
    const long closed = s * (n - 1) / m;
    // Same number from modular inversion (m is invertible mod n here).
    if (least_residue(make_rational(-s, m), n) != closed)
        throw std::logic_error("closed form s(n-1)/m disagrees with <-s/m>_n");
    return closed;
}

VerificationReport verify_thm1(const TheoremParams& params, const DriverOptions& opts) {
    Stopwatch sw;
    if (!is_class1(params)) throw InvalidParameter("thm1 needs n odd, n > 1, 0 < s < m, n == 1 (mod m): " + describe(params));
    const long r = require_r(params, 2);
    const long n = params.n;
    const long len = guarded_power(n, r, opts);
    const int sign = parity_sign(class1_sign_exponent(params.m, params.s, n));

    const RatFun lhs = sum_side({params.m, params.s, 1, len, 0});
    const RatFun rhs = signed_value(sign, sum_side({params.m, params.s, n, len / n, 0}));

    VerificationReport rep;
    rep.theorem = Theorem::Thm1;
    rep.params = params;
    rep.modulus_factors = modulus_thm1_factors(n, r);
    auto witness = check_modulo_factors(lhs - rhs, rep.modulus_factors);
    return finish(std::move(rep), std::move(witness), sw);
}

VerificationReport verify_thm2(const TheoremParams& params, const DriverOptions& opts) {
    Stopwatch sw;
    if (!is_class2(params)) throw InvalidParameter("thm2 needs n odd, n > 1, 0 < s < m, n == -1 (mod m): " + describe(params));
    const long r = require_r(params, 2);
    const long n = params.n;
    const long len = guarded_power(n, r, opts);

    const RatFun lhs = sum_side({params.m, params.s, 1, len, 0});
    const RatFun rhs = sum_side({params.m, params.s, n * n, len / (n * n), 0});

    VerificationReport rep;
    rep.theorem = Theorem::Thm2;
    rep.params = params;
    for (long j = 1; j <= r / 2; ++j)
        rep.modulus_factors.push_back({static_cast<std::uint64_t>(nt::checked_pow(n, static_cast<unsigned>(2 * j))), 2});
    auto witness = check_modulo_factors(lhs - rhs, rep.modulus_factors);
    return finish(std::move(rep), std::move(witness), sw);
}

VerificationReport verify_lemma21(long m, long n, long s, const DriverOptions& opts) {
    Stopwatch sw;
    if (n < 1 || n % 2 == 0) throw InvalidParameter("lemma21 needs n odd and positive");
    if (m < 1 || s < 1 || s >= m) throw InvalidParameter("lemma21 needs 0 < s < m");
    if (nt::gcd(m, n) != 1) throw InvalidParameter("lemma21 needs gcd(m, n) = 1");
    if (n > opts.size_guard) throw SizeGuardExceeded("n exceeds the size guard");

    const long res_s = least_residue(make_rational(-s, m), n).get_si();
    const long res_ms = least_residue(make_rational(s - m, m), n).get_si();
    const int sign = parity_sign(res_s);
    // Roots of (1 - a q^{s + m<-s/m>_n}) and (a - q^{m - s + m<(s-m)/m>_n}).
    const long u1 = -(s + m * res_s);
    const long u2 = m - s + m * res_ms;
    if (u1 == u2) throw std::logic_error("lemma21 roots coincide");

    VerificationReport rep;
    rep.theorem = Theorem::Lemma21;
    rep.params = {m, s, n, std::nullopt};
    std::optional<std::string> witness;
    for (long u : {u1, u2}) {
        const RatFun value = sum_side({m, s, 1, n, u});
        if (value != RatFun(sign)) {
            witness = "a = q^" + std::to_string(u) + ": sum is " + to_string(value).substr(0, 120) +
                      ", expected " + std::to_string(sign);
            break;
        }
    }
    return finish(std::move(rep), std::move(witness), sw);
}

namespace {

struct RootFamilyMember {
    long u;
    int predicted;
    std::string label;
};

}  // namespace

VerificationReport verify_param_roots(int variant, const TheoremParams& params, const DriverOptions& opts) {
    Stopwatch sw;
    if (variant != 1 && variant != 2) throw InvalidParameter("param variant must be 1 or 2");
    if (variant == 1 && !is_class1(params))
        throw InvalidParameter("param1 needs n == 1 (mod m), n odd, 0 < s < m: " + describe(params));
    if (variant == 2 && !is_class2(params))
        throw InvalidParameter("param2 needs n == -1 (mod m), n odd, 0 < s < m: " + describe(params));
    const long r = require_r(params, 2);
    const long m = params.m, s = params.s, n = params.n;
    const long len = guarded_power(n, r, opts);
    const long scale = variant == 1 ? n : n * n;
    const long rhs_len = len / scale;
    // Sign prefactor of the right side: (-1)^{<-s/m>_n} for variant 1; for
    // variant 2, <-s/m>_{n^2} = s (n^2 - 1)/m is even and drops out.
    const int rhs_sign = variant == 1 ? parity_sign(class1_sign_exponent(m, s, n)) : 1;

    // a = q^{-s t (m j + 1)} and a = q^{(m-s) t (m j + 1)} with t = n or n^2.
    std::vector<RootFamilyMember> roots;
    const long base = variant == 1 ? s * (n - 1) / m : 0;
    for (long j = 0; j <= (rhs_len - 1) / s; ++j)
        roots.push_back({-s * scale * (m * j + 1), parity_sign(s * j + base), "family 1, j=" + std::to_string(j)});
    for (long j = 0; j <= (rhs_len - 1) / (m - s); ++j)
        roots.push_back({(m - s) * scale * (m * j + 1), parity_sign((m - s) * j + base),
                         "family 2, j=" + std::to_string(j)});

    std::set<long> distinct;
    for (const auto& root : roots) distinct.insert(root.u);
    if (distinct.size() != roots.size() || distinct.count(0) != 0)
        throw std::logic_error("substituted roots are not pairwise distinct");

    VerificationReport rep;
    rep.theorem = variant == 1 ? Theorem::Param1Roots : Theorem::Param2Roots;
    rep.params = params;
    // Multiplicity of Phi_{t^j} in the a -> 1 limit of the modulus.
    const long step = variant == 1 ? 1 : 2;
    for (long j = 1; j * step <= r; ++j) {
        const long rest = nt::checked_pow(n, static_cast<unsigned>(r - step * j)) - 1;
        rep.modulus_factors.push_back({static_cast<std::uint64_t>(nt::checked_pow(n, static_cast<unsigned>(step * j))),
                                       rest / s + rest / (m - s) + 2});
    }

    std::optional<std::string> witness;
    for (const auto& root : roots) {
        const RatFun lhs = sum_side({m, s, 1, len, root.u});
        const RatFun rhs = signed_value(rhs_sign, sum_side({m, s, scale, rhs_len, root.u}));
        const RatFun expected(root.predicted);
        if (lhs != rhs || lhs != expected) {
            std::ostringstream os;
            os << root.label << " (a = q^" << root.u << "): LHS " << to_string(lhs).substr(0, 80) << ", RHS "
               << to_string(rhs).substr(0, 80) << ", predicted " << root.predicted;
            witness = os.str();
            break;
        }
    }
    return finish(std::move(rep), std::move(witness), sw);
}

VerificationReport verify_gz_d2(long n, long r, const DriverOptions& opts) {
    Stopwatch sw;
    if (n <= 1 || n % 2 == 0) throw InvalidParameter("gz-d2 needs n odd and n > 1");
    if (r < 1) throw InvalidParameter("gz-d2 needs r >= 1");
    const long len = guarded_power(n, r, opts);
    const int sign = jacobi(-1, n);
    // Upper limits (n^r - 1)/2 are inclusive.
    const RatFun lhs = sum_side({2, 1, 1, (len - 1) / 2 + 1, 0});
    const RatFun rhs = signed_value(sign, sum_side({2, 1, n, (len / n - 1) / 2 + 1, 0}));

    VerificationReport rep;
    rep.theorem = Theorem::GZd2;
    rep.params = {2, 1, n, r};
    rep.modulus_factors = modulus_thm1_factors(n, r);
    auto witness = check_modulo_factors(lhs - rhs, rep.modulus_factors);
    return finish(std::move(rep), std::move(witness), sw);
}

MultipleCount count_multiples(long m, long s, long n, long r, long j) {
    if (!is_class1({m, s, n, r})) throw InvalidParameter("count_multiples needs class-1 parameters");
    if (r < 1 || j < 1 || j > r) throw InvalidParameter("count_multiples needs 1 <= j <= r");
    const long top = nt::checked_pow(n, static_cast<unsigned>(r - 1)) - 1;
    const long nj = nt::checked_pow(n, static_cast<unsigned>(j));
    MultipleCount out;
    for (long i = 0; i <= top / s; ++i)
        if ((s * n * (m * i + 1)) % nj == 0) ++out.counted;
    for (long i = 0; i <= top / (m - s); ++i)
        if (((m - s) * n * (m * i + 1)) % nj == 0) ++out.counted;
    const long rest = nt::checked_pow(n, static_cast<unsigned>(r - j)) - 1;
    out.expected = rest / s + rest / (m - s) + 2;
    return out;
}

bool exponent_bound_holds(long m, long s, long n, long r, long j) {
    if (!is_class1({m, s, n, r})) throw InvalidParameter("exponent_bound_holds needs class-1 parameters");
    if (r < 1 || j < 1 || j > r) throw InvalidParameter("exponent_bound_holds needs 1 <= j <= r");
    const long rest = nt::checked_pow(n, static_cast<unsigned>(r - j)) - 1;
    const long top = nt::checked_pow(n, static_cast<unsigned>(r - 1)) - 1;
    return nt::checked_pow(n, static_cast<unsigned>(j - 1)) * ((rest / s) * m + 1) <= (top / s) * m + 1;
}

}  // namespace qdwork
