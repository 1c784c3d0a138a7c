#include "qdwork/report.hpp"

#include <sstream>

namespace qdwork {

using nlohmann::json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

json valuation_json(const Valuation& v) { return v ? json(*v) : json(nullptr); }

Valuation valuation_from(const json& j) { return j.is_null() ? Valuation{} : Valuation{j.get<long>()}; }

Integer integer_from(const json& j) {
    return j.is_string() ? Integer(j.get<std::string>()) : Integer(j.get<long>());
}

json entry_json(const ReportEntry& e) {
    return std::visit(
        overloaded{
            [](const VerificationReport& r) {
                json params = {{"m", r.params.m}, {"s", r.params.s}, {"n", r.params.n}};
                params["r"] = r.params.r ? json(*r.params.r) : json(nullptr);
                json factors = json::array();
                for (const auto& f : r.modulus_factors) factors.push_back({f.index, f.multiplicity});
                return json{{"kind", "theorem"},
                            {"theorem", to_string(r.theorem)},
                            {"params", params},
                            {"modulus_factors", factors},
                            {"passed", r.passed},
                            {"failure_witness", r.failure_witness ? json(*r.failure_witness) : json(nullptr)},
                            {"elapsed_ms", r.elapsed_ms},
                            {"skipped", r.skipped}};
            },
            [](const CongruenceInstance& c) {
                return json{{"kind", "congruence"},
                            {"check", c.check},
                            {"label", c.label},
                            {"prime", c.prime},
                            {"exponent", c.exponent},
                            {"lhs_residue", c.lhs_residue.get_str()},
                            {"rhs_residue", c.rhs_residue.get_str()},
                            {"passed", c.passed}};
            },
            [](const DworkEntry& d) {
                return json{{"kind", "dwork"},
                            {"p", d.p},
                            {"r", d.r},
                            {"m", d.m},
                            {"s", d.s},
                            {"diff_valuation", valuation_json(d.result.diff_valuation)},
                            {"w_valuation", valuation_json(d.result.w_valuation)},
                            {"inverse_binomial_valuation", d.result.inverse_binomial_valuation},
                            {"passed", d.result.passed}};
            },
        },
        e);
}

ReportEntry entry_from(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "theorem") {
        VerificationReport r;
        r.theorem = theorem_from_string(j.at("theorem").get<std::string>());
        const json& p = j.at("params");
        r.params.m = p.at("m").get<long>();
        r.params.s = p.at("s").get<long>();
        r.params.n = p.at("n").get<long>();
        if (!p.at("r").is_null()) r.params.r = p.at("r").get<long>();
        for (const auto& f : j.at("modulus_factors"))
            r.modulus_factors.push_back({f.at(0).get<std::uint64_t>(), f.at(1).get<long>()});
        r.passed = j.at("passed").get<bool>();
        if (!j.at("failure_witness").is_null()) r.failure_witness = j.at("failure_witness").get<std::string>();
        r.elapsed_ms = j.at("elapsed_ms").get<long>();
        r.skipped = j.value("skipped", false);
        return r;
    }
    if (kind == "congruence") {
        CongruenceInstance c;
        c.check = j.at("check").get<std::string>();
        c.label = j.at("label").get<std::string>();
        c.prime = j.at("prime").get<long>();
        c.exponent = j.at("exponent").get<long>();
        c.lhs_residue = integer_from(j.at("lhs_residue"));
        c.rhs_residue = integer_from(j.at("rhs_residue"));
        c.passed = j.at("passed").get<bool>();
        return c;
    }
    if (kind == "dwork") {
        DworkEntry d;
        d.p = j.at("p").get<long>();
        d.r = j.at("r").get<long>();
        d.m = j.at("m").get<long>();
        d.s = j.at("s").get<long>();
        d.result.diff_valuation = valuation_from(j.at("diff_valuation"));
        d.result.w_valuation = valuation_from(j.at("w_valuation"));
        d.result.inverse_binomial_valuation = j.at("inverse_binomial_valuation").get<long>();
        d.result.passed = j.at("passed").get<bool>();
        return d;
    }
    throw json::other_error::create(501, "unknown entry kind '" + kind + "'", &j);
}

json config_json(const ScanConfig& c) {
    return json{{"m", c.m_values},
                {"s", c.s_rule},
                {"n", c.n_values},
                {"r", c.r_values},
                {"theorems",
                 {{"thm1", c.thm1},
                  {"thm2", c.thm2},
                  {"lemma21", c.lemma21},
                  {"param1", c.param1},
                  {"param2", c.param2},
                  {"gz_d2", c.gz_d2}}},
                {"padic_prime_bound", c.padic_prime_bound},
                {"size_guard", c.size_guard}};
}

ScanConfig config_from(const json& j) {
    ScanConfig c;
    c.m_values = j.at("m").get<std::vector<long>>();
    c.s_rule = j.at("s").get<std::string>();
    c.n_values = j.at("n").get<std::vector<long>>();
    c.r_values = j.at("r").get<std::vector<long>>();
    const json& t = j.at("theorems");
    c.thm1 = t.at("thm1").get<bool>();
    c.thm2 = t.at("thm2").get<bool>();
    c.lemma21 = t.at("lemma21").get<bool>();
    c.param1 = t.at("param1").get<bool>();
    c.param2 = t.at("param2").get<bool>();
    c.gz_d2 = t.at("gz_d2").get<bool>();
    c.padic_prime_bound = j.at("padic_prime_bound").get<long>();
    c.size_guard = j.at("size_guard").get<long>();
    return c;
}

}  // namespace

Summary tally(const std::vector<ReportEntry>& entries) {
    Summary s;
    for (const auto& e : entries) {
        const auto* rep = std::get_if<VerificationReport>(&e);
        bool passed = false;
        if (rep) {
            if (rep->skipped) {
                ++s.skipped;
                continue;
            }
            passed = rep->passed;
        } else if (const auto* c = std::get_if<CongruenceInstance>(&e)) {
            passed = c->passed;
        } else {
            passed = std::get<DworkEntry>(e).result.passed;
        }
        ++(passed ? s.passed : s.failed);
    }
    return s;
}

ReportDocument make_document(std::vector<ReportEntry> entries, std::optional<ScanConfig> config) {
    ReportDocument doc;
    doc.config = std::move(config);
    doc.entries = std::move(entries);
    doc.summary = tally(doc.entries);
    return doc;
}

json to_json(const ReportDocument& doc) {
    json entries = json::array();
    for (const auto& e : doc.entries) entries.push_back(entry_json(e));
    return json{{"tool", doc.tool},
                {"version", doc.version},
                {"config", doc.config ? config_json(*doc.config) : json(nullptr)},
                {"entries", entries},
                {"summary",
                 {{"passed", doc.summary.passed}, {"failed", doc.summary.failed}, {"skipped", doc.summary.skipped}}}};
}

ReportDocument document_from_json(const json& j) {
    ReportDocument doc;
    doc.tool = j.at("tool").get<std::string>();
    doc.version = j.at("version").get<std::string>();
    if (!j.at("config").is_null()) doc.config = config_from(j.at("config"));
    for (const auto& e : j.at("entries")) doc.entries.push_back(entry_from(e));
    const json& s = j.at("summary");
    doc.summary = {s.at("passed").get<long>(), s.at("failed").get<long>(), s.at("skipped").get<long>()};
    return doc;
}

std::string describe(const ReportEntry& entry) {
    std::ostringstream os;
    std::visit(overloaded{
                   [&](const VerificationReport& r) {
                       os << to_string(r.theorem) << " m=" << r.params.m << " s=" << r.params.s
                          << " n=" << r.params.n;
                       if (r.params.r) os << " r=" << *r.params.r;
                       os << (r.skipped ? " SKIPPED" : r.passed ? " PASS" : " FAIL");
                       if (!r.modulus_factors.empty()) {
                           os << " modulus=";
                           for (std::size_t i = 0; i < r.modulus_factors.size(); ++i)
                               os << (i ? "*" : "") << "Phi_" << r.modulus_factors[i].index << "^"
                                  << r.modulus_factors[i].multiplicity;
                       }
                       os << " elapsed_ms=" << r.elapsed_ms;
                       if (r.failure_witness) os << " witness: " << *r.failure_witness;
                   },
                   [&](const CongruenceInstance& c) {
                       os << c.check << " p=" << c.prime << " " << c.label << (c.passed ? " PASS" : " FAIL")
                          << " lhs=" << c.lhs_residue.get_str() << " rhs=" << c.rhs_residue.get_str() << " (mod "
                          << c.prime << "^" << c.exponent << ")";
                   },
                   [&](const DworkEntry& d) {
                       os << "dwork p=" << d.p << " r=" << d.r << " m=" << d.m << " s=" << d.s
                          << (d.result.passed ? " PASS" : " FAIL")
                          << " diff_valuation=" << to_string(d.result.diff_valuation)
                          << " w_valuation=" << to_string(d.result.w_valuation)
                          << " inverse_binomial_valuation=" << d.result.inverse_binomial_valuation;
                   },
               },
               entry);
    return os.str();
}

std::string emit_report(const ReportDocument& doc, ReportFormat format) {
    if (format == ReportFormat::Json) return to_json(doc).dump(2) + "\n";
    std::ostringstream os;
    for (const auto& e : doc.entries) os << describe(e) << "\n";
    os << "summary: passed=" << doc.summary.passed << " failed=" << doc.summary.failed
       << " skipped=" << doc.summary.skipped << "\n";
    return os.str();
}

}  // namespace qdwork
