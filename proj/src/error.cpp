#include "arcgraph/error.hpp"

namespace arcgraph {

const char *to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::InvalidArgument: return "invalid-argument";
  case ErrorCode::BudgetExceeded: return "budget-exceeded";
  case ErrorCode::NotASubgroup: return "not-a-subgroup";
  case ErrorCode::Multiedge: return "multiedge";
  case ErrorCode::InvalidZeta: return "invalid-zeta";
  case ErrorCode::AbelianizationMismatch: return "abelianization-mismatch";
  case ErrorCode::Inconsistency: return "inconsistency";
  case ErrorCode::NotAutomorphism: return "not-automorphism";
  case ErrorCode::Disconnected: return "disconnected";
  case ErrorCode::Intransitive: return "intransitive";
  case ErrorCode::Parse: return "parse-error";
  case ErrorCode::UnknownId: return "unknown-id";
  case ErrorCode::Internal: return "internal-error";
  }
  return "unknown";
}

} // namespace arcgraph
