// cli.hpp — Subcommands of the `tdpt` driver and their exit codes

#pragma once

#include "tdpt/config.hpp"

#include <iosfwd>
#include <string>

namespace tdpt::cli {

enum ExitCode : int {
    ok = 0,
    validation_failed = 1,
    config_error = 2,
    numerical_failure = 3,
};

// Each writes its CSV into `out_dir` and returns the path written.
std::string run_evolve(const Config& c, const std::string& out_dir);
std::string run_spectrum(const Config& c, const std::string& out_dir, std::ostream& report);
std::string run_modes(const Config& c, const std::string& out_dir);
std::string run_oracle(const Config& c, const std::string& out_dir);
// Prints the summary, writes validation.json; true when every criterion passes.
bool run_validate(const Config& c, const std::string& out_dir, std::ostream& os);

// Full command line: `tdpt <evolve|spectrum|modes|oracle|validate> [--config f] [--out d]
// [--profile fast|slow]`. Errors are reported on `err`.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace tdpt::cli
