#ifndef COVER_RAMSEY_ERROR_HPP
#define COVER_RAMSEY_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace cover_ramsey {

enum class ErrorCode {
  kInvalidInput,           // malformed value that violates a type invariant
  kParse,                  // text format error
  kPrecondition,           // operation precondition not met
  kUnsupportedParameters,  // no implemented construction for these parameters
  kLimitExceeded,          // search space larger than the configured limit
  kNoValidN,               // threshold search found no admissible n
  kVerifyFail,             // certificate or coloring failed re-verification
  kInternal,               // broken internal invariant
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace cover_ramsey

#endif  // COVER_RAMSEY_ERROR_HPP
