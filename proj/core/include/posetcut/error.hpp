#ifndef POSETCUT_ERROR_HPP
#define POSETCUT_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace posetcut {

using Element = std::uint32_t;

enum class ErrorCode {
  // Partial-order axioms.
  ReflexivePair,
  AntisymmetryViolation,
  TransitivityViolation,
  CycleDetected,
  // Argument errors.
  IdOutOfRange,
  NotARelation,
  NotACover,
  EmptyPoset,
  NotAPartition,
  TooLargeForOracle,
  TooLarge,
  InvalidSpec,
  ParseError,
  // Induction.
  ChainTooShort,
  AlreadyAntichain,
  ProfileViolation,
  InternalAssertion,
};

std::string_view to_string(ErrorCode code);

/// True for the codes that mean "the input is not a partial order".
bool is_axiom_violation(ErrorCode code);

/// Every failure in the library is reported as an `Error`. `witness()` holds
/// the elements that demonstrate the failure when there are any: the pair
/// (x, x) for ReflexivePair, (x, y) for AntisymmetryViolation, the missing
/// pair (x, z) followed by the intermediate y for TransitivityViolation, and
/// the cycle's vertices in order for CycleDetected.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<Element> witness = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<Element>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<Element> witness_;
};

}  // namespace posetcut

#endif  // POSETCUT_ERROR_HPP
