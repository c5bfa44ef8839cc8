#include "cover_ramsey/error.hpp"

namespace cover_ramsey {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return "INVALID_INPUT";
    case ErrorCode::kParse: return "PARSE_ERROR";
    case ErrorCode::kPrecondition: return "PRECONDITION";
    case ErrorCode::kUnsupportedParameters: return "UNSUPPORTED_PARAMETERS";
    case ErrorCode::kLimitExceeded: return "LIMIT_EXCEEDED";
    case ErrorCode::kNoValidN: return "NO_VALID_N";
    case ErrorCode::kVerifyFail: return "VERIFY_FAIL";
    case ErrorCode::kInternal: return "INTERNAL";
  }
  return "UNKNOWN";
}

void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace cover_ramsey
