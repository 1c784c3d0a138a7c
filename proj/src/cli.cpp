#include "qdwork/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "qdwork/errors.hpp"
#include "qdwork/polyring.hpp"
#include "qdwork/report.hpp"
#include "qdwork/scan.hpp"

namespace qdwork {

namespace {

constexpr long kMaxCyclotomicIndex = 1000000;

struct Options {
    bool json = false;
    std::string out_path;
    std::optional<long> size_guard;

    long cyclo_index = 0;

    std::string theorem;
    std::optional<long> m, s, n, r;

    std::string check;
    std::optional<long> p, variant;
    std::string x;

    std::string config_path;
    std::optional<long> jobs;
};

long require(const std::optional<long>& v, const char* flag, const std::string& what) {
    if (!v) throw InvalidParameter(what + " needs " + flag);
    return *v;
}

Rational parse_rational(const std::string& text) {
    Rational x;
    if (text.empty() || x.set_str(text, 10) != 0) throw InvalidParameter("--x expects a rational like 1/3, got '" + text + "'");
    if (x.get_den() == 0) throw InvalidParameter("--x has a zero denominator");
    x.canonicalize();
    return x;
}

int emit(const ReportDocument& doc, const Options& o, std::ostream& out) {
    const std::string text = emit_report(doc, o.json ? ReportFormat::Json : ReportFormat::Text);
    if (o.out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(o.out_path);
        if (!f || !(f << text)) throw InvalidParameter("cannot write report to '" + o.out_path + "'");
    }
    return exit_code_for(doc);
}

DriverOptions driver_options(const Options& o) {
    DriverOptions d;
    if (o.size_guard) {
        if (*o.size_guard < 1) throw InvalidParameter("--size-guard must be >= 1");
        d.size_guard = *o.size_guard;
    }
    return d;
}

int run_cyclotomic(const Options& o, std::ostream& out) {
    if (o.cyclo_index < 1 || o.cyclo_index > kMaxCyclotomicIndex)
        throw InvalidParameter("cyclotomic index must be in 1.." + std::to_string(kMaxCyclotomicIndex));
    const std::string poly = to_string(cyclotomic(static_cast<std::uint64_t>(o.cyclo_index)));
    std::string text;
    if (o.json)
        text = nlohmann::json{{"index", o.cyclo_index}, {"polynomial", poly}}.dump(2) + "\n";
    else
        text = poly + "\n";
    if (o.out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(o.out_path);
        if (!f || !(f << text)) throw InvalidParameter("cannot write to '" + o.out_path + "'");
    }
    return kExitPass;
}

int run_verify(const Options& o, std::ostream& out) {
    const DriverOptions d = driver_options(o);
    const Theorem t = theorem_from_string(o.theorem);
    const std::string what = "verify " + o.theorem;
    VerificationReport rep;
    switch (t) {
        case Theorem::Lemma21:
            rep = verify_lemma21(require(o.m, "--m", what), require(o.n, "--n", what), require(o.s, "--s", what), d);
            break;
        case Theorem::GZd2:
            rep = verify_gz_d2(require(o.n, "--n", what), require(o.r, "--r", what), d);
            break;
        default: {
            const TheoremParams p{require(o.m, "--m", what), require(o.s, "--s", what), require(o.n, "--n", what),
                                  require(o.r, "--r", what)};
            if (t == Theorem::Thm1) rep = verify_thm1(p, d);
            else if (t == Theorem::Thm2) rep = verify_thm2(p, d);
            else rep = verify_param_roots(t == Theorem::Param1Roots ? 1 : 2, p, d);
        }
    }
    return emit(make_document({rep}), o, out);
}

int run_padic(const Options& o, std::ostream& out) {
    const std::string what = "padic " + o.check;
    ReportEntry entry;
    if (o.check == "mortenson") {
        const long v = require(o.variant, "--variant", what);
        if (v < 1 || v > 4) throw InvalidParameter("--variant must be 1..4");
        entry = check_mortenson(require(o.p, "--p", what), static_cast<int>(v));
    } else if (o.check == "sun-liu") {
        if (o.x.empty()) throw InvalidParameter(what + " needs --x");
        entry = check_sun_liu(require(o.p, "--p", what), o.n.value_or(1), parse_rational(o.x));
    } else {
        const long p = require(o.p, "--p", what), r = require(o.r, "--r", what);
        const long m = require(o.m, "--m", what), s = require(o.s, "--s", what);
        entry = DworkEntry{p, r, m, s, check_dwork_padic(p, r, m, s)};
    }
    return emit(make_document({entry}), o, out);
}

int run_scan_command(const Options& o, std::ostream& out) {
    ScanConfig config = load_scan_config(o.config_path);
    if (o.jobs) config.jobs = *o.jobs;
    if (o.size_guard) config.size_guard = *o.size_guard;
    validate(config);
    return emit(run_scan(config), o, out);
}

}  // namespace

int exit_code_for(const ReportDocument& doc) {
    return doc.summary.failed > 0 ? kExitCongruenceFailure : kExitPass;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact verification of q-analogue supercongruences", kToolName};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.add_flag("--json", o.json, "Emit the report as JSON");
    app.add_option("--out", o.out_path, "Write the report to PATH instead of standard output");
    app.add_option("--size-guard", o.size_guard, "Largest n^r a driver accepts (default 200)");

    auto* cyclo = app.add_subcommand("cyclotomic", "Print the n-th cyclotomic polynomial");
    cyclo->add_option("N", o.cyclo_index, "Index n >= 1")->required();

    auto* verify = app.add_subcommand("verify", "Verify one theorem instance");
    verify->add_option("theorem", o.theorem, "thm1 | thm2 | lemma21 | param1 | param2 | gz-d2")
        ->required()
        ->check(CLI::IsMember({"thm1", "thm2", "lemma21", "param1", "param2", "gz-d2"}));
    verify->add_option("--m", o.m);
    verify->add_option("--s", o.s);
    verify->add_option("--n", o.n);
    verify->add_option("--r", o.r);

    auto* padic = app.add_subcommand("padic", "Run one q = 1 congruence check");
    padic->add_option("check", o.check, "mortenson | sun-liu | dwork")
        ->required()
        ->check(CLI::IsMember({"mortenson", "sun-liu", "dwork"}));
    padic->add_option("--p", o.p, "Prime");
    padic->add_option("--variant", o.variant, "Mortenson variant 1..4");
    padic->add_option("--n", o.n, "Sun-Liu multiplier (default 1)");
    padic->add_option("--x", o.x, "Sun-Liu rational argument, e.g. 1/3");
    padic->add_option("--r", o.r, "Dwork exponent");
    padic->add_option("--m", o.m, "Dwork denominator");
    padic->add_option("--s", o.s, "Dwork numerator");

    auto* scan = app.add_subcommand("scan", "Run a parameter grid from a config file");
    scan->add_option("--config", o.config_path, "Config file")->required();
    scan->add_option("--jobs", o.jobs, "Worker threads (overrides the config)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForVersion&) {
        out << kToolName << " " << kToolVersion << "\n";
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitInvalid;
    }

    try {
        if (*cyclo) return run_cyclotomic(o, out);
        if (*verify) return run_verify(o, out);
        if (*padic) return run_padic(o, out);
        return run_scan_command(o, out);
    } catch (const InvalidParameter& e) {
        err << "invalid parameters: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const NotPIntegral& e) {
        err << "invalid parameters: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace qdwork
