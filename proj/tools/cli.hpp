#pragma once

#include "sheafloc/verify.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace sheafloc::cli {

/// Exit codes: 0 success, 1 domain error or failed verification, 2 usage error.
enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one command line (args excludes the program name). `closed` is the
/// shift function checked by `verify`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const ShiftFunction& closed = shift_closed);

}  // namespace sheafloc::cli
