#pragma once

#include <iosfwd>
#include <span>
#include <string_view>

namespace kempner::cli {

enum ExitCode : int {
    kOk = 0,
    kDomainError = 1,
    kUsageError = 2,
    kVerifyFailed = 3,
};

// args excludes the program name. Results go to out, diagnostics to err.
int run(std::span<const std::string_view> args, std::ostream& out, std::ostream& err);

}  // namespace kempner::cli
