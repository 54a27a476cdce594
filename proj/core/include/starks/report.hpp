#pragma once

#include <string>
#include <vector>

namespace starks {

/// One failed check inside a verification run. `where` holds the indices
/// (row numbers, line labels, ...) that locate the failure.
struct Violation {
  std::string kind;
  std::vector<long long> where;
  std::string detail;
};

/// Report-style result of a verifier: empty `violations` means pass.
struct VerificationReport {
  std::string subject;
  std::vector<Violation> violations;
  std::vector<std::string> notes;
  long long checks = 0;

  bool passed() const { return violations.empty(); }
  void fail(std::string kind, std::vector<long long> where, std::string detail);
  void merge(const VerificationReport& other);
  std::string summary() const;
};

}  // namespace starks
