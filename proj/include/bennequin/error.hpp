#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bennequin {

enum class ErrorCode {
  // parse_braid
  kZeroToken,
  kGeneratorOutOfRange,
  kMalformedCaret,
  kBadStrandCount,
  kMalformedToken,
  // structural
  kStrandMismatch,
  kInvalidArgument,
  kMultiComponentClosure,
  kDisconnectedSurface,
  // quadform
  kNonSymmetric,
  kUnresolvablePivot,
  kMalformedMatrix,
  // search
  kSearchBudgetExhausted,
  // tau
  kTauContradiction,
  kUnknownNode,
  // report
  kInvariantViolation,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kZeroToken: return "zero-token";
    case ErrorCode::kGeneratorOutOfRange: return "generator-out-of-range";
    case ErrorCode::kMalformedCaret: return "malformed-caret";
    case ErrorCode::kBadStrandCount: return "bad-strand-count";
    case ErrorCode::kMalformedToken: return "malformed-token";
    case ErrorCode::kStrandMismatch: return "strand-mismatch";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kMultiComponentClosure: return "multi-component-closure";
    case ErrorCode::kDisconnectedSurface: return "disconnected-surface";
    case ErrorCode::kNonSymmetric: return "non-symmetric";
    case ErrorCode::kUnresolvablePivot: return "unresolvable-pivot";
    case ErrorCode::kMalformedMatrix: return "malformed-matrix";
    case ErrorCode::kSearchBudgetExhausted: return "search-budget-exhausted";
    case ErrorCode::kTauContradiction: return "tau-contradiction";
    case ErrorCode::kUnknownNode: return "unknown-node";
    case ErrorCode::kInvariantViolation: return "invariant-violation";
  }
  return "unknown";
}

/// Every failure raised by the library carries a stable code; the message is
/// for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bennequin
