#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pdl::cli {

/// Exit codes: 0 satisfied / passed, 1 unsatisfied / failed, 2 bad input,
/// 3 search budget exhausted.
enum ExitCode { kOk = 0, kNo = 1, kInputError = 2, kBudget = 3 };

/// Runs one command line (without the program name).
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pdl::cli
