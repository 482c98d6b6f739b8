#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sgenus {

enum ExitCode { kOk = 0, kUsage = 1, kComputation = 2, kMismatch = 3 };

/// Entry point of the sgenus tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Splits "T(2,7),T(2,11)" at commas outside parentheses.
std::vector<std::string> split_basis(const std::string& text);

}  // namespace sgenus
