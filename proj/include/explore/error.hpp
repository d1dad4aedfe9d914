#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace explore {

enum class ErrorCode {
  InvalidParameter,
  Overflow,
  UnknownVertex,
  SelfLoop,
  DuplicateEdge,
  IllegalMove,
  BudgetExceeded,
  WorldInconsistency,
  OracleTooLarge,
  ConfigError,
  IoError,
};

std::string_view to_string(ErrorCode code);

class ExploreError : public std::runtime_error {
 public:
  ExploreError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace explore
