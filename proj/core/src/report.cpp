#include "starks/report.hpp"

#include <sstream>

namespace starks {

void VerificationReport::fail(std::string kind, std::vector<long long> where,
                              std::string detail) {
  violations.push_back({std::move(kind), std::move(where), std::move(detail)});
}

void VerificationReport::merge(const VerificationReport& other) {
  violations.insert(violations.end(), other.violations.begin(),
                    other.violations.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  checks += other.checks;
}

std::string VerificationReport::summary() const {
  std::ostringstream out;
  out << subject << ": " << (passed() ? "pass" : "FAIL") << " (" << checks
      << " checks";
  if (!passed()) out << ", " << violations.size() << " violations";
  out << ")";
  return out.str();
}

}  // namespace starks
