#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nilcoh {

enum class ErrorKind {
  dimension_mismatch,
  validation,
  unsupported_step,
  unsupported_algebra,
  internal,
  not_maximal_rank,
  degenerate_direction,
  not_in_ideal,
  not_scalar,
  tail_check_failed,
  resolution_loss,
  mode_mismatch,
  estimate_violated,
  obstruction_nonzero,
  not_weakly_integral,
  non_integer_my,
  rational_relation,
  under_resolved,
  invalid_argument,
  parse,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::dimension_mismatch: return "DimensionMismatch";
    case ErrorKind::validation: return "ValidationError";
    case ErrorKind::unsupported_step: return "UnsupportedStep";
    case ErrorKind::unsupported_algebra: return "UnsupportedAlgebra";
    case ErrorKind::internal: return "InternalError";
    case ErrorKind::not_maximal_rank: return "NotMaximalRank";
    case ErrorKind::degenerate_direction: return "DegenerateDirection";
    case ErrorKind::not_in_ideal: return "NotInIdeal";
    case ErrorKind::not_scalar: return "NotScalar";
    case ErrorKind::tail_check_failed: return "TailCheckFailed";
    case ErrorKind::resolution_loss: return "ResolutionLoss";
    case ErrorKind::mode_mismatch: return "ModeMismatch";
    case ErrorKind::estimate_violated: return "EstimateViolated";
    case ErrorKind::obstruction_nonzero: return "ObstructionNonzero";
    case ErrorKind::not_weakly_integral: return "NotWeaklyIntegral";
    case ErrorKind::non_integer_my: return "NonIntegerMY";
    case ErrorKind::rational_relation: return "RationalRelation";
    case ErrorKind::under_resolved: return "UnderResolved";
    case ErrorKind::invalid_argument: return "InvalidArgument";
    case ErrorKind::parse: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  Error(ErrorKind kind, const std::string& message, std::size_t component)
      : Error(kind, message) {
    component_ = component;
  }

  ErrorKind kind() const noexcept { return kind_; }

  /// Index of the offending component for errors raised by multi-component drivers.
  std::optional<std::size_t> component() const noexcept { return component_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> component_;
};

}  // namespace nilcoh
