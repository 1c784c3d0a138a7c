#include "qdwork/polyring.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

#include "qdwork/errors.hpp"
#include "qdwork/numtheory.hpp"

namespace qdwork {

Rational make_rational(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Poly::Poly(const Rational& c) {
    if (c != 0) {
        c_.push_back(c.get_num());
        den_ = c.get_den();
    }
}

Poly::Poly(std::vector<Integer> numerators, Integer denominator)
    : c_(std::move(numerators)), den_(std::move(denominator)) {
    if (den_ == 0) throw DivisionByZero("polynomial with zero denominator");
    normalize();
}

Poly Poly::from_rationals(const std::vector<Rational>& coeffs) {
    Integer l = 1;
    for (const auto& c : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> num;
    num.reserve(coeffs.size());
    for (const auto& c : coeffs) num.push_back(c.get_num() * (l / c.get_den()));
    return Poly(std::move(num), l);
}

Poly Poly::monomial(std::size_t k, const Rational& c) {
    if (c == 0) return {};
    std::vector<Integer> num(k + 1);
    num[k] = c.get_num();
    return Poly(std::move(num), c.get_den());
}

Poly Poly::q_power_minus_one(std::size_t j) {
    if (j == 0) return {};
    std::vector<Integer> num(j + 1);
    num[0] = -1;
    num[j] = 1;
    return Poly(std::move(num));
}

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    if (c_.empty()) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : c_) c = -c;
    }
    if (den_ == 1) return;
    Integer g = den_;
    for (const auto& c : c_) {
        if (c == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) return;
    }
    for (auto& c : c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

Rational Poly::coeff(std::size_t i) const {
    if (i >= c_.size()) return 0;
    Rational r(c_[i], den_);
    r.canonicalize();
    return r;
}

Rational Poly::leading_coeff() const { return c_.empty() ? Rational(0) : coeff(c_.size() - 1); }

std::vector<Rational> Poly::coefficients() const {
    std::vector<Rational> out;
    out.reserve(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out.push_back(coeff(i));
    return out;
}

std::size_t Poly::low_degree() const noexcept {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return i;
    return 0;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    } else {
        Integer l;
        mpz_lcm(l.get_mpz_t(), den_.get_mpz_t(), o.den_.get_mpz_t());
        const Integer mine = l / den_, theirs = l / o.den_;
        if (mine != 1)
            for (auto& c : c_) c *= mine;
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            mpz_addmul(c_[i].get_mpz_t(), o.c_[i].get_mpz_t(), theirs.get_mpz_t());
        den_ = l;
    }
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Poly& o) { return *this = poly_mul(*this, o); }

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        c_.clear();
        den_ = 1;
        return *this;
    }
    if (c.get_num() != 1)
        for (auto& x : c_) x *= c.get_num();
    den_ *= c.get_den();
    normalize();
    return *this;
}

Poly& Poly::mul_q_power_minus_one(std::size_t j) {
    if (j == 0) {
        c_.clear();
        den_ = 1;
        return *this;
    }
    if (c_.empty()) return *this;
    // (q^j - 1) * sum c_i q^i: new_i = c_{i-j} - c_i
    const std::size_t n = c_.size();
    c_.resize(n + j);
    for (std::size_t i = n + j; i-- > 0;) {
        if (i >= j)
            c_[i] = c_[i - j] - c_[i];
        else
            c_[i] = -c_[i];
    }
    return *this;
}

Poly& Poly::div_q_power_minus_one(std::size_t j) {
    if (j == 0) throw DivisionByZero("division by q^0 - 1 = 0");
    if (c_.empty()) return *this;
    if (c_.size() <= j) throw NonExactDivision();
    // a = (q^j - 1) b  =>  b_i = b_{i-j} - a_i, solved upward.
    const std::size_t n = c_.size() - j;
    std::vector<Integer> b(n);
    for (std::size_t i = 0; i < n; ++i) {
        b[i] = -c_[i];
        if (i >= j) b[i] += b[i - j];
    }
    // The top j coefficients must equal b_{i-j}.
    for (std::size_t i = n; i < c_.size(); ++i) {
        const bool ok = i >= j ? c_[i] == b[i - j] : c_[i] == 0;
        if (!ok) throw NonExactDivision();
    }
    c_ = std::move(b);
    return *this;
}

Poly& Poly::shift_up(std::size_t k) {
    if (k == 0 || c_.empty()) return *this;
    c_.insert(c_.begin(), k, Integer(0));
    return *this;
}

Poly& Poly::shift_down(std::size_t k) {
    if (k == 0 || c_.empty()) return *this;
    if (low_degree() < k) throw NonExactDivision("not divisible by q^k");
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(k));
    return *this;
}

Poly Poly::monic() const {
    if (c_.empty()) return {};
    std::vector<Integer> num = c_;
    Integer lc = c_.back();
    Poly r(std::move(num), lc);
    return r;
}

Poly Poly::primitive_part() const {
    if (c_.empty()) return {};
    Integer g = 0;
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    std::vector<Integer> num = c_;
    if (c_.back() < 0) g = -g;
    if (g != 1)
        for (auto& c : num) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return Poly(std::move(num));
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto& x = a.numerators();
    const auto& y = b.numerators();
    std::vector<Integer> out(x.size() + y.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
    }
    return Poly(std::move(out), a.denominator() * b.denominator());
}

namespace {

// Long division of integer numerators by a divisor with leading coefficient
// +-1; stays in Z.
std::pair<std::vector<Integer>, std::vector<Integer>> divrem_unit_lead(std::vector<Integer> r,
                                                                       const std::vector<Integer>& b) {
    const std::size_t db = b.size() - 1;
    const bool neg = b.back() < 0;
    if (r.size() < b.size()) return {{}, std::move(r)};
    std::vector<Integer> q(r.size() - db);
    for (std::size_t k = r.size(); k-- > db;) {
        if (r[k] == 0) continue;
        Integer t = neg ? Integer(-r[k]) : r[k];
        q[k - db] = t;
        for (std::size_t i = 0; i <= db; ++i)
            if (b[i] != 0) mpz_submul(r[k - db + i].get_mpz_t(), t.get_mpz_t(), b[i].get_mpz_t());
    }
    r.resize(db);
    return {std::move(q), std::move(r)};
}

}  // namespace

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.degree() < b.degree()) return {Poly{}, a};
    const auto& bn = b.numerators();
    if (bn.back() == 1 || bn.back() == -1) {
        // a = A/da, b = B/db with B unit-led: A = Q B + R gives
        // a = (Q db / da) b + R / da.
        auto [q, r] = divrem_unit_lead(a.numerators(), bn);
        Poly quot(std::move(q), a.denominator());
        quot *= Rational(b.denominator());
        return {std::move(quot), Poly(std::move(r), a.denominator())};
    }
    std::vector<Rational> r = a.coefficients();
    const std::vector<Rational> bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    std::vector<Rational> q(r.size() - db);
    const Rational lc = bc.back();
    for (std::size_t k = r.size(); k-- > db;) {
        if (r[k] == 0) continue;
        Rational t = r[k] / lc;
        q[k - db] = t;
        for (std::size_t i = 0; i <= db; ++i)
            if (bc[i] != 0) r[k - db + i] -= t * bc[i];
    }
    r.resize(db);
    return {Poly::from_rationals(q), Poly::from_rationals(r)};
}

Poly poly_divrem_exact(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divrem(a, b);
    if (!r.is_zero()) throw NonExactDivision();
    return q;
}

bool poly_divides(const Poly& divisor, const Poly& a) {
    return poly_divrem(a, divisor).second.is_zero();
}

namespace {

// Pseudo-remainder of primitive integer polynomials, kept primitive.
Poly prem_primitive(const Poly& a, const Poly& b) {
    std::vector<Integer> r = a.numerators();
    const auto& bn = b.numerators();
    const std::size_t db = bn.size() - 1;
    const Integer& lc = bn.back();
    const bool unit = lc == 1 || lc == -1;
    if (unit) return Poly(divrem_unit_lead(std::move(r), bn).second).primitive_part();
    while (r.size() >= bn.size()) {
        const std::size_t k = r.size() - 1;
        Integer t = r[k];
        if (t != 0) {
            for (auto& c : r) c *= lc;
            for (std::size_t i = 0; i <= db; ++i)
                mpz_submul(r[k - db + i].get_mpz_t(), t.get_mpz_t(), bn[i].get_mpz_t());
        }
        r.pop_back();
        while (!r.empty() && r.back() == 0) r.pop_back();
        Poly p(r);
        r = p.primitive_part().numerators();
    }
    return Poly(std::move(r)).primitive_part();
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw BothZero();
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    Poly x = a.primitive_part(), y = b.primitive_part();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        if (y.degree() == 0) return Poly(1);
        Poly r = prem_primitive(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Rational poly_eval(const Poly& a, const Rational& x) {
    const auto& c = a.numerators();
    Rational acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        acc *= x;
        acc += Rational(c[i]);
    }
    acc /= Rational(a.denominator());
    return acc;
}

namespace {

struct CyclotomicCache {
    std::mutex mu;
    std::map<std::uint64_t, std::unique_ptr<const Poly>> table;
};

CyclotomicCache& cyclotomic_cache() {
    static CyclotomicCache cache;
    return cache;
}

}  // namespace

const Poly& cyclotomic(std::uint64_t n) {
    if (n == 0) throw InvalidParameter("cyclotomic index must be positive");
    auto& cache = cyclotomic_cache();
    {
        std::lock_guard lock(cache.mu);
        if (auto it = cache.table.find(n); it != cache.table.end()) return *it->second;
    }
    // q^n - 1 = prod_{d | n} Phi_d; divide out the proper divisors.
    Poly proper(1);
    for (std::uint64_t d : nt::divisors(n))
        if (d != n) proper = poly_mul(proper, cyclotomic(d));
    auto phi = std::make_unique<const Poly>(poly_divrem_exact(Poly::q_power_minus_one(n), proper));
    std::lock_guard lock(cache.mu);
    // A concurrent builder may have won; both values are equal.
    auto [it, inserted] = cache.table.emplace(n, std::move(phi));
    return *it->second;
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = p.size(); k-- > 0;) {
        Rational c = p.coeff(k);
        if (c == 0) continue;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        Rational mag = abs(c);
        if (k == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << 'q';
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

}  // namespace qdwork
