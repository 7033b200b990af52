#ifndef SLN_CLI_HPP
#define SLN_CLI_HPP

#include "sln/report.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace sln {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int m = 2;
    int n = 1;
    int degree = 3; // truncation bound, 2..5
    std::vector<std::string> suites = {"all"};
    unsigned long long seed = 1;
    std::string format = "json"; // json | markdown
    std::string out;             // empty: stdout
    std::string export_path;     // empty: no dataset export

    /// Throws ConfigError on m == n, degree outside 2..5, unknown suite
    /// name, or unknown format.
    void validate() const;
};

/// Catalogue order is also execution and report order.
const std::vector<std::string>& suite_catalogue();

/// Runs the selected suites over a shared basis and resolves the empirical
/// convention records.  Does not touch the filesystem.
VerificationReport run(const RunConfig& config);

/// Writes the basis tables and both structure-constant datasets as JSON
/// lines to config.export_path.
void export_constants(const RunConfig& config);

/// Full driver: parses flags (and an optional key=value config file),
/// executes, writes outputs.  Returns the process exit status:
/// 0 all selected suites pass, 1 verification failure, 2 configuration error.
int cli_main(int argc, const char* const* argv);

} // namespace sln

#endif
