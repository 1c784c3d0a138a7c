#ifndef QDWORK_SCAN_HPP
#define QDWORK_SCAN_HPP

#include <istream>
#include <string>

#include "qdwork/report.hpp"

namespace qdwork {

/// Parses the line-oriented config grammar described in the README.
/// Throws ConfigError with a line number on any problem.
ScanConfig parse_scan_config(std::istream& in);
ScanConfig load_scan_config(const std::string& path);

/// ConfigError unless every list is nonempty, jobs >= 1 and size_guard >= 1.
void validate(const ScanConfig& config);

/// Runs every selected driver over the grid. Entries come out ordered by
/// (theorem, m, s, n, r) whatever the value of config.jobs.
ReportDocument run_scan(const ScanConfig& config);

}  // namespace qdwork

#endif  // QDWORK_SCAN_HPP
