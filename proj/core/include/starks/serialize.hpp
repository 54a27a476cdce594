#pragma once

#include <string>
#include <string_view>

#include "starks/designs.hpp"
#include "starks/hadamard.hpp"
#include "starks/ksets.hpp"
#include "starks/numbers.hpp"

namespace starks {

/// Malformed input document. `where` is either "line L, column C" for syntax
/// errors or a JSON pointer for schema errors.
class FormatError : public InvalidArgument {
 public:
  FormatError(std::string where, const std::string& what)
      : InvalidArgument(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// Value of the top-level "kind" member ("gh", "shadamard", "kset", "rbibd",
/// "factorization").
std::string document_kind(std::string_view text);

std::string write_gh(const GHMatrix& m);
GHMatrix read_gh(std::string_view text);

std::string write_shadamard(const SHadamard& s);
SHadamard read_shadamard(std::string_view text);

/// Vectors go out as exponents when every entry is a root of unity of the
/// set's order, otherwise as per-entry coefficient lists (a bare integer for
/// a rational-integer entry).
std::string write_kset(const KSSet& k);
KSSet read_kset(std::string_view text);

std::string write_rbibd(const RBIBD& d);
RBIBD read_rbibd(std::string_view text);

std::string write_factorization(const Factorization& f);
Factorization read_factorization(std::string_view text);

}  // namespace starks
