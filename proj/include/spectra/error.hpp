#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spectra {

enum class ErrorCode {
  IndexOutOfRange,
  SelfLoop,
  BadParams,
  ParseError,
  IoError,
  NoConvergence,
  DomainError,
  Disconnected,
  BadPartition,
  BadSets,
  InvalidShift,
  NotATree,
  BudgetExceeded,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spectra
