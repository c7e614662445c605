#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace shadowchi::cli {

// Process exit codes.
enum ExitCode : int {
    kOk = 0,          // succeeded / property verified
    kViolated = 1,    // property falsified or asserted object does not exist
    kInputError = 2,  // bad flags or malformed input
    kUndecided = 3,   // search budget exhausted
};

// Parses argv (argv[0] is the program name), runs the subcommand and writes
// its output to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

// One row of the consolidated table.
struct ReportRow {
    std::string name;
    std::string expected;
    std::string observed;
    enum class Status { Pass, Fail, Undecided } status = Status::Undecided;
};

struct ConsolidatedReport {
    int k = 3;
    std::vector<ReportRow> rows;
    int exit_code() const;
    nlohmann::json to_json() const;
    std::string to_table() const;
};

struct ReportOptions {
    int k = 3;
    std::uint64_t seed = 1;
    long long budget_ms = 0;  // 0: unlimited (or SHADOWCHI_BUDGET_MS)
    int jobs = 1;
};

ConsolidatedReport build_report(const ReportOptions& options);

}  // namespace shadowchi::cli
