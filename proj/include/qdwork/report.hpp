#ifndef QDWORK_REPORT_HPP
#define QDWORK_REPORT_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qdwork/padic.hpp"
#include "qdwork/verifier.hpp"

namespace qdwork {

inline constexpr const char* kToolName = "qdwork";
inline constexpr const char* kToolVersion = "1.0.0";

/// Grid description read from a scan config file.
struct ScanConfig {
    std::vector<long> m_values;
    std::string s_rule = "all";  // every s with 0 < s < m
    std::vector<long> n_values;
    std::vector<long> r_values;
    bool thm1 = true;
    bool thm2 = true;
    bool lemma21 = false;
    bool param1 = false;
    bool param2 = false;
    bool gz_d2 = false;
    long padic_prime_bound = 0;  // 0 disables the q = 1 checks
    long jobs = 1;
    long size_guard = 200;

    friend bool operator==(const ScanConfig&, const ScanConfig&) = default;
};

struct DworkEntry {
    long p = 0, r = 0, m = 0, s = 0;
    DworkPadicResult result;

    friend bool operator==(const DworkEntry& a, const DworkEntry& b) {
        return a.p == b.p && a.r == b.r && a.m == b.m && a.s == b.s &&
               a.result.diff_valuation == b.result.diff_valuation &&
               a.result.w_valuation == b.result.w_valuation &&
               a.result.inverse_binomial_valuation == b.result.inverse_binomial_valuation &&
               a.result.passed == b.result.passed;
    }
};

using ReportEntry = std::variant<VerificationReport, CongruenceInstance, DworkEntry>;

struct Summary {
    long passed = 0;
    long failed = 0;
    long skipped = 0;

    friend bool operator==(const Summary&, const Summary&) = default;
};

struct ReportDocument {
    std::string tool = kToolName;
    std::string version = kToolVersion;
    std::optional<ScanConfig> config;
    std::vector<ReportEntry> entries;
    Summary summary;

    friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

Summary tally(const std::vector<ReportEntry>& entries);

/// Builds a document whose summary matches its entries.
ReportDocument make_document(std::vector<ReportEntry> entries, std::optional<ScanConfig> config = {});

enum class ReportFormat { Text, Json };

std::string emit_report(const ReportDocument& doc, ReportFormat format);

nlohmann::json to_json(const ReportDocument& doc);
/// Inverse of to_json; nlohmann::json exceptions on malformed input.
ReportDocument document_from_json(const nlohmann::json& j);

/// One text line for an entry.
std::string describe(const ReportEntry& entry);

}  // namespace qdwork

#endif  // QDWORK_REPORT_HPP
