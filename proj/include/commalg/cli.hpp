#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "commalg/io.hpp"
#include "commalg/linalg.hpp"

namespace commalg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInputError = 2;

/// args[0] is the program name. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The analyze report; aborts when its internal consistency checks fail.
Json analysis_report(const Matrix& a, std::optional<std::pair<int, int>> omega, bool with_basis);

}  // namespace commalg
