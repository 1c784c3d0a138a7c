#ifndef QDWORK_CLI_HPP
#define QDWORK_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qdwork {

enum ExitCode : int {
    kExitPass = 0,
    kExitCongruenceFailure = 1,
    kExitInvalid = 2,
    kExitInternal = 3,
};

struct ReportDocument;

/// 1 when the document holds a failed entry, else 0.
int exit_code_for(const ReportDocument& doc);

/// Entry point of the command-line tool. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdwork

#endif  // QDWORK_CLI_HPP
