#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lachi {

enum class ErrorCode {
  LoopEdge,
  DuplicateEdge,
  Disconnected,
  TooSmall,
  TooLarge,
  DegenerateFamily,
  EmptyTargetSet,
  LabelingMismatch,
  NotLocalAntimagic,
  ParityViolation,
  ClassOutOfRange,
  NotApplicable,
  InvalidProfile,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the toolkit carries one of the codes above, so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lachi
