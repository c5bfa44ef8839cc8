#ifndef COVER_RAMSEY_TOOLS_CLI_HPP
#define COVER_RAMSEY_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cover_ramsey/error.hpp"

namespace cover_ramsey::cli {

// Process exit codes.
constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 1;
constexpr int kExitLimit = 2;
constexpr int kExitVerify = 3;

int exit_code_for(ErrorCode code);

std::string sha256_hex(std::string_view data);

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cover_ramsey::cli

#endif  // COVER_RAMSEY_TOOLS_CLI_HPP
