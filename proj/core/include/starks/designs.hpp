#pragma once

#include <cstddef>
#include <vector>

#include "starks/graph.hpp"
#include "starks/ksets.hpp"
#include "starks/report.hpp"

namespace starks {

/// Partition of a host graph's edges into regular spanning factors.
struct Factorization {
  SimpleGraph host;
  std::vector<std::vector<Pair>> factors;
};

/// Checks that factors are spanning, regular of one common degree,
/// pairwise edge-disjoint, and cover the host.
VerificationReport verify_factorization(const Factorization& f);

/// Paley graph of order 9 built over GF(9) = Z_3[i], i^2 = -1, with the
/// element a + b i numbered 1 + 3a + b.
SimpleGraph paley_graph9();

/// K_9 split into two 4-regular factors, each isomorphic to P(9). Factor 0
/// carries the first coordinate block of the J(9,2) realization.
Factorization k9_paley_factorization();

/// The 18-vector, 9-basis set in dimension 4, read from one half of the
/// J(9,2) realization: copy 0 from the first four coordinates, copy 1 from
/// the last four. Labels are the edges of the matching Paley factor.
KSSet ceg18(int copy = 0);

/// Each host edge in factor i gets its factor's vector padded into block i.
/// reps[i] must label exactly the edges of factor i.
KSSet factor_embed(const std::vector<KSSet>& reps, const Factorization& f);

/// Resolvable design on points 1..v. resolution[c] lists the block indices
/// of parallel class c.
struct RBIBD {
  int v = 0, b = 0, r = 0, k = 0, lambda = 0;
  std::vector<std::vector<int>> blocks;
  std::vector<std::vector<std::size_t>> resolution;
};

/// AG(2,k) for an odd prime k. The point (x, y) is numbered 1 + k x + y.
/// Lines y = m x + c come in (m, c) order; the vertical lines form the last class.
RBIBD ag2_rbibd(int k);
VerificationReport verify_rbibd(const RBIBD& d);

/// One (k-1)-regular factor of K_v per parallel class; needs lambda = 1.
Factorization rbibd_to_factorization(const RBIBD& d);

/// Copies the J(k,2) representation onto every block (sorted block points
/// play the lines 1..k) and embeds one block of coordinates per class.
KSSet recursive_construct(const KSSet& base, const RBIBD& d);

}  // namespace starks
