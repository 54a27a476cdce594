#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "starks/cyclotomic.hpp"
#include "starks/report.hpp"

namespace starks {

/// Generalized Hadamard matrix GH(g, lambda) over Z_g, entries stored as
/// residues. Square with side g * lambda.
struct GHMatrix {
  int group_order = 0;
  int lambda = 0;
  std::vector<std::vector<int>> rows;

  std::size_t size() const { return rows.size(); }
  friend bool operator==(const GHMatrix&, const GHMatrix&) = default;
};

/// S-Hadamard matrix with entries zeta_g^e, stored by exponent.
struct SHadamard {
  int order = 0;
  int root_order = 0;
  std::vector<std::vector<int>> exponents;
  bool normalized = false;

  CycVector row(std::size_t i) const;
  friend bool operator==(const SHadamard&, const SHadamard&) = default;
};

bool is_quadratic_residue(long long a, int q);
int smallest_nonresidue(int q);

/// Jungnickel's GH(q, 2) for an odd prime q and a non-square c modulo q,
/// with GF(q) ordered naturally 0, 1, ..., q-1. Defaults c to the smallest
/// non-residue.
GHMatrix jungnickel_gh(int q, std::optional<int> c = std::nullopt);

/// The p x p multiplication table (i * j mod p), a GH(p, 1).
GHMatrix gh_mult_table(int p);

/// Kronecker product: block (i, j) is b shifted by a[i][j]. Lambda is
/// recomputed from the side length.
GHMatrix gh_kronecker(const GHMatrix& a, const GHMatrix& b);

/// Lists every row pair whose difference misses the lambda-balance.
VerificationReport verify_gh(const GHMatrix& m);

/// S = (zeta_g^h_ij); requires g >= 3.
SHadamard gh_to_shadamard(const GHMatrix& m);

/// Exact check of H H* = n I, unit modulus, and orthogonality of the rows of
/// the entrywise square.
VerificationReport verify_shadamard(const SHadamard& s);

/// Multiplies every row entrywise by the inverse of row 1.
SHadamard normalize_shadamard(const SHadamard& s);

}  // namespace starks
