#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "starks/engine.hpp"
#include "starks/ksets.hpp"
#include "starks/numbers.hpp"

namespace starks {

/// Outputs here are positions 1..N-1 along a line, points in lexicographic
/// order. Position a on line x is the point {x, partner}.
int position_to_partner(int line, int position);
int partner_to_position(int line, int partner);

/// c(a,b|x,y) for lines x, y in 1..N and positions a, b in 1..N-1.
int bell_coefficient(int n, int x, int y, int a, int b);

struct BellFunctional {
  int n_lines = 0;
  int outputs = 0;
  std::vector<int> alice_inputs;
  std::vector<int> bob_inputs;
  long long claimed_bound = 0;

  int c(int x, int y, int a, int b) const { return bell_coefficient(n_lines, x, y, a, b); }
  /// Inputs shared by both players.
  std::vector<int> common_lines() const;
  /// Functional as an engine objective (0-based positions).
  SeparableProblem problem() const;
  long long value(const std::vector<int>& alice_pos, const std::vector<int>& bob_pos) const;
};

/// Alice 1..N-2, Bob 3..N, claimed bound (N-2)^2 - 1.
BellFunctional build_functional(int n);

/// M_{x,y} as CSV, rows indexed by a and columns by b.
std::string m_matrix_csv(const BellFunctional& f, int x, int y);

struct LocalBound {
  long long bound = 0;
  std::vector<int> alice_pos, bob_pos;  // 1-based positions per input
  bool certified = false;
};
LocalBound local_bound(const BellFunctional& f, const EngineOptions& opts = {});

/// Sum of c(a,b|x,y) p(a,b|x,y) over the KS strategy's exact probabilities.
Rational quantum_functional_value(const BellFunctional& f, const KSSet& k);

std::size_t cg_dimension(const BellFunctional& f);
/// Collins-Gisin coordinates of the deterministic behaviour: joint block in
/// (x, y, a, b) order without the last output of either party, then Alice
/// marginals (x, a), then Bob marginals (y, b).
std::vector<std::int8_t> to_cg(const std::vector<int>& alice_pos, const std::vector<int>& bob_pos, const BellFunctional& f);
std::size_t cg_joint_index(const BellFunctional& f, std::size_t xi, std::size_t yi, int a, int b);

/// Affine rank of 0/1 points: rank of {p_i - p_0}. Fraction-free integer
/// elimination; the result does not depend on the point order.
std::size_t affine_rank(const std::vector<std::vector<std::int8_t>>& points);

/// CG joint positions (x', y', a, b) with x' != y' common lines, a, b below
/// the dropped last output, and c(a,b|x',y') = 0.
struct ForcedZero {
  int x, y, a, b;
};
std::vector<ForcedZero> forced_zero_positions(const BellFunctional& f, const std::vector<std::pair<int, int>>& line_pairs);
/// Every ordered pair of distinct common lines.
std::vector<std::pair<int, int>> common_line_pairs(const BellFunctional& f);

struct NonTightnessCertificate {
  int n_lines = 0;
  long long bound = 0;
  bool bound_certified = false;
  /// Losing at common-line inputs (x',y') implies losing at (y',x'), checked on
  /// diagonal-winning outputs and on every saturating point.
  bool symmetry_lemma = false;
  std::uint64_t saturating_points = 0;
  std::uint64_t saturating_alice = 0;
  bool enumeration_complete = false;
  std::size_t forced_zeros = 0;
  /// Forced zeros that hold at every saturating point individually.
  bool forced_zeros_per_point = false;
  /// CG coordinates equal to zero on all saturating points.
  std::size_t zero_on_all = 0;
  std::size_t affine_rank = 0;
  std::size_t dim_ns = 0;
  bool tight = true;
  std::vector<std::string> notes;
  bool complete() const { return bound_certified && enumeration_complete; }
};

NonTightnessCertificate nontightness_certificate(const BellFunctional& f, const EngineOptions& opts = {});

}  // namespace starks
