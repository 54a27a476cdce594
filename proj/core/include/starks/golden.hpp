#pragma once

#include <array>
#include <vector>

#include "starks/graph.hpp"
#include "starks/hadamard.hpp"
#include "starks/ksets.hpp"

namespace starks::golden {

struct LabeledRow {
  int i;
  int j;
  std::vector<int> entries;
};

/// The printed GH(3,2) matrix D^(3).
GHMatrix d3();

/// J(7,2) realization over zeta_3, exponent form.
const std::vector<LabeledRow>& j7_exponents();
/// J(11,2) realization over zeta_5, exponent form.
const std::vector<LabeledRow>& j11_exponents();
/// J(9,2) realization with integer entries. The printed v^{2,9} has a
/// misplaced parenthesis; the row here is (0,0,0,0,0,1,0,0).
const std::vector<LabeledRow>& j9_integers();

KSSet j7_set();
KSSet j11_set();
KSSet j9_set();

/// Partner chosen on each line by the printed N = 7 classical strategy;
/// 0 where the player never receives that line.
inline constexpr std::array<int, 8> j7_alice_strategy{0, 2, 1, 4, 3, 6, 0, 0};
inline constexpr std::array<int, 8> j7_bob_strategy{0, 0, 0, 4, 3, 6, 5, 6};

/// Coefficient blocks M_{3,4}, M_{3,5}, M_{4,5} of the N = 7 functional.
using Matrix6 = std::array<std::array<int, 6>, 6>;
const Matrix6& m34();
const Matrix6& m35();
const Matrix6& m45();

}  // namespace starks::golden
