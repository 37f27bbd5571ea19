#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace superchar {

enum class ErrorCode {
  NotAGroup,
  IdentityNotZero,
  OrderCapExceeded,
  NotASubgroup,
  PrimeRejected,
  EigensplitFailure,
  GroupMismatch,
  NotACharacter,
  NotAPartition,
  NotASupercharacterTheory,
  IncompatibleTheories,
  IncompatibleFamily,
  SubgroupNotInFamily,
  NotASuperclassFunction,
  InvalidCertificate,
  InvalidInput,
};

std::string_view error_name(ErrorCode code);

/// Error raised by every library operation. `witness` carries a short,
/// machine-readable locator for the offending object when one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string witness = {})
      : std::runtime_error(std::string(error_name(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::string witness_;
};

struct Violation {
  std::string location;
  std::string detail;
};

/// Outcome of a verifier. A report never throws for a failed check; it
/// collects every violation it finds.
struct Report {
  std::string check;
  bool passed = true;
  std::vector<std::string> steps;
  std::vector<Violation> violations;
  std::vector<std::string> warnings;

  void fail(std::string location, std::string detail) {
    passed = false;
    violations.push_back({std::move(location), std::move(detail)});
  }
  void note(std::string step) { steps.push_back(std::move(step)); }
};

}  // namespace superchar
