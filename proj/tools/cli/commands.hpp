#pragma once

#include <ostream>
#include <string>

#include "cli/config.hpp"
#include "cli/table.hpp"

namespace radscat::cli {

enum ExitCode { kSuccess = 0, kConfigError = 2, kNumericalFailure = 3 };

Table cmd_smatrix(const RunConfig& cfg);
Table cmd_resonances(const RunConfig& cfg);
Table cmd_eigenfunction(const RunConfig& cfg);
Table cmd_criterion(const RunConfig& cfg);
//! Every row has a pass column; the caller turns any failure into exit code 3.
Table cmd_verify(const RunConfig& cfg);
Table cmd_transform(const RunConfig& cfg);

//! Full command line: parses flags, runs one subcommand, maps errors to exit codes.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace radscat::cli
