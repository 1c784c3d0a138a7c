#include "qdwork/scan.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <thread>

#include "qdwork/errors.hpp"
#include "qdwork/numtheory.hpp"

namespace qdwork {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(long line, const std::string& msg) {
    throw ConfigError("config line " + std::to_string(line) + ": " + msg);
}

long parse_long(const std::string& text, long line) {
    const std::string t = trim(text);
    long v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) fail(line, "expected an integer, got '" + t + "'");
    return v;
}

// Comma-separated integers; an item "a..b" expands to a, a+1, ..., b.
std::vector<long> parse_list(const std::string& text, long line) {
    std::vector<long> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const std::string item = trim(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (item.empty()) fail(line, "empty list item");
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_long(item, line));
        } else {
            const long lo = parse_long(item.substr(0, dots), line);
            const long hi = parse_long(item.substr(dots + 2), line);
            if (lo > hi) fail(line, "empty range '" + item + "'");
            if (hi - lo > 10000) fail(line, "range '" + item + "' is too long");
            for (long v = lo; v <= hi; ++v) out.push_back(v);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

bool parse_bool(const std::string& text, long line) {
    if (text == "true") return true;
    if (text == "false") return false;
    fail(line, "expected true or false, got '" + text + "'");
}

}  // namespace

ScanConfig parse_scan_config(std::istream& in) {
    ScanConfig c;
    std::string section;
    std::string raw;
    long line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string text = trim(raw.substr(0, raw.find('#')));
        if (text.empty()) continue;
        if (text.front() == '[') {
            if (text.back() != ']') fail(line, "unterminated section header");
            section = trim(text.substr(1, text.size() - 2));
            if (section != "grid" && section != "theorems" && section != "padic" && section != "run")
                fail(line, "unknown section [" + section + "]");
            continue;
        }
        const auto eq = text.find('=');
        if (eq == std::string::npos) fail(line, "expected key = value");
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (section.empty()) fail(line, "key '" + key + "' outside a section");
        if (value.empty()) fail(line, "missing value for '" + key + "'");

        if (section == "grid") {
            if (key == "m") c.m_values = parse_list(value, line);
            else if (key == "n") c.n_values = parse_list(value, line);
            else if (key == "r") c.r_values = parse_list(value, line);
            else if (key == "s") {
                if (value != "all") fail(line, "s supports only 'all'");
                c.s_rule = value;
            } else fail(line, "unknown key '" + key + "' in [grid]");
        } else if (section == "theorems") {
            static const std::map<std::string, bool ScanConfig::*> flags = {
                {"thm1", &ScanConfig::thm1},     {"thm2", &ScanConfig::thm2},
                {"lemma21", &ScanConfig::lemma21}, {"param1", &ScanConfig::param1},
                {"param2", &ScanConfig::param2}, {"gz_d2", &ScanConfig::gz_d2}};
            const auto it = flags.find(key);
            if (it == flags.end()) fail(line, "unknown key '" + key + "' in [theorems]");
            c.*(it->second) = parse_bool(value, line);
        } else if (section == "padic") {
            if (key != "prime_bound") fail(line, "unknown key '" + key + "' in [padic]");
            c.padic_prime_bound = parse_long(value, line);
        } else {
            if (key == "jobs") c.jobs = parse_long(value, line);
            else if (key == "size_guard") c.size_guard = parse_long(value, line);
            else fail(line, "unknown key '" + key + "' in [run]");
        }
    }
    validate(c);
    return c;
}

ScanConfig load_scan_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    return parse_scan_config(in);
}

void validate(const ScanConfig& c) {
    if (c.m_values.empty()) throw ConfigError("config: m list is empty");
    if (c.n_values.empty()) throw ConfigError("config: n list is empty");
    if (c.r_values.empty()) throw ConfigError("config: r list is empty");
    if (c.s_rule != "all") throw ConfigError("config: s supports only 'all'");
    if (c.jobs < 1) throw ConfigError("config: jobs must be >= 1");
    if (c.size_guard < 1) throw ConfigError("config: size_guard must be >= 1");
    if (c.padic_prime_bound < 0) throw ConfigError("config: prime_bound must be >= 0");
}

namespace {

using Task = std::function<ReportEntry()>;

template <class F>
Task theorem_task(Theorem t, TheoremParams params, F run) {
    return [t, params, run]() -> ReportEntry {
        try {
            return run();
        } catch (const InvalidParameter& e) {
            VerificationReport rep;
            rep.theorem = t;
            rep.params = params;
            rep.skipped = true;
            rep.failure_witness = e.what();
            return rep;
        }
    };
}

std::vector<long> sorted_unique(std::vector<long> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<Task> build_tasks(const ScanConfig& c) {
    const DriverOptions opts{c.size_guard};
    const auto ms = sorted_unique(c.m_values);
    const auto ns = sorted_unique(c.n_values);
    const auto rs = sorted_unique(c.r_values);
    std::vector<Task> tasks;

    const auto grid = [&](Theorem t, auto driver) {
        for (long m : ms)
            for (long s = 1; s < m; ++s)
                for (long n : ns)
                    for (long r : rs) {
                        const TheoremParams p{m, s, n, r};
                        tasks.push_back(theorem_task(t, p, [p, opts, driver] { return driver(p, opts); }));
                    }
    };
    if (c.thm1) grid(Theorem::Thm1, [](const TheoremParams& p, const DriverOptions& o) { return verify_thm1(p, o); });
    if (c.thm2) grid(Theorem::Thm2, [](const TheoremParams& p, const DriverOptions& o) { return verify_thm2(p, o); });
    if (c.lemma21)
        for (long m : ms)
            for (long s = 1; s < m; ++s)
                for (long n : ns) {
                    const TheoremParams p{m, s, n, std::nullopt};
                    tasks.push_back(theorem_task(Theorem::Lemma21, p, [p, opts] {
                        return verify_lemma21(p.m, p.n, p.s, opts);
                    }));
                }
    if (c.param1)
        grid(Theorem::Param1Roots,
             [](const TheoremParams& p, const DriverOptions& o) { return verify_param_roots(1, p, o); });
    if (c.param2)
        grid(Theorem::Param2Roots,
             [](const TheoremParams& p, const DriverOptions& o) { return verify_param_roots(2, p, o); });
    if (c.gz_d2)
        for (long n : ns)
            for (long r : rs) {
                const TheoremParams p{2, 1, n, r};
                tasks.push_back(theorem_task(Theorem::GZd2, p, [p, opts] { return verify_gz_d2(p.n, *p.r, opts); }));
            }

    if (c.padic_prime_bound > 0) {
        std::vector<long> primes;
        for (long p = 3; p <= c.padic_prime_bound; ++p)
            if (nt::is_prime(static_cast<std::uint64_t>(p))) primes.push_back(p);
        for (long p : primes)
            if (p >= 5)
                for (int v = 1; v <= 4; ++v) tasks.push_back([p, v]() -> ReportEntry { return check_mortenson(p, v); });
        const std::vector<Rational> xs = {0, make_rational(1, 2), make_rational(1, 3), make_rational(2, 3),
                                          make_rational(1, 4), make_rational(3, 4), make_rational(1, 5)};
        for (long p : primes)
            for (const auto& x : xs)
                if (mpz_divisible_ui_p(x.get_den_mpz_t(), static_cast<unsigned long>(p)) == 0)
                    tasks.push_back([p, x]() -> ReportEntry { return check_sun_liu(p, 1, x); });
        // q -> 1 shadow of the thm1 grid: prime n == 1 (mod m) within the size guard.
        for (long m : ms)
            for (long s = 1; s < m; ++s)
                for (long p : ns)
                    for (long r : rs) {
                        if (p < 2 || p > c.padic_prime_bound || !nt::is_prime(static_cast<std::uint64_t>(p))) continue;
                        if (m < 1 || p % m != 1 % m || m % p == 0 || r < 2) continue;
                        long len = 1;
                        bool small = true;
                        for (long i = 0; i < r && small; ++i) {
                            len *= p;
                            small = len <= c.size_guard;
                        }
                        if (!small) continue;
                        tasks.push_back([p, r, m, s]() -> ReportEntry {
                            return DworkEntry{p, r, m, s, check_dwork_padic(p, r, m, s)};
                        });
                    }
    }
    return tasks;
}

}  // namespace

ReportDocument run_scan(const ScanConfig& config) {
    validate(config);
    const std::vector<Task> tasks = build_tasks(config);
    std::vector<std::optional<ReportEntry>> results(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};

    const auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                results[i] = tasks[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const auto workers = static_cast<std::size_t>(std::min<long>(config.jobs, static_cast<long>(tasks.size())));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<ReportEntry> entries;
    entries.reserve(results.size());
    for (auto& r : results) entries.push_back(std::move(*r));
    return make_document(std::move(entries), config);
}

}  // namespace qdwork
