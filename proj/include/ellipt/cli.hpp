#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ellipt {

/// Runs the command line (arguments without the program name). Returns the
/// process exit code: 0 on success, 1 on failed verification or numerical
/// non-convergence, 2 on usage and validation errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Fixed scientific formatting used by every CSV and JSON writer
/// (17 significant digits, lowercase exponent).
std::string format_number(double v);

}  // namespace ellipt
