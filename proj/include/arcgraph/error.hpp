#pragma once

#include <stdexcept>
#include <string>

namespace arcgraph {

enum class ErrorCode {
  InvalidArgument,
  BudgetExceeded,
  NotASubgroup,
  Multiedge,
  InvalidZeta,
  AbelianizationMismatch,
  Inconsistency,
  NotAutomorphism,
  Disconnected,
  Intransitive,
  Parse,
  UnknownId,
  Internal,
};

const char *to_string(ErrorCode code);

// All library failures surface as this one exception type; callers branch on
// code() rather than on a class hierarchy.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace arcgraph
