#pragma once

#include <stdexcept>
#include <string>

namespace ssg {

enum class ErrorCode {
  InvalidParameter,
  ParseError,
  MissingGridMetadata,
  SameColorSwap,
  InconsistentColoring,
  BudgetExceeded,
  ConstructionFailed,
  NotATree,
  WrongK,
  UnknownFamily,
  IncompleteParams,
  UnknownExperiment,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ssg
