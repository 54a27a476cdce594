#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starks/cyclotomic_field.hpp"
#include "starks/engine.hpp"
#include "starks/graph.hpp"
#include "starks/ksets.hpp"

namespace starks {

enum class Variant { colored, line_line, point_line };
std::string to_string(Variant v);
std::optional<Variant> parse_variant(const std::string& s);

/// A star game on the J(N,2) configuration. Alice's inputs are lines and her
/// output is a partner index (the point {line, partner}). Bob's inputs are
/// lines with partner outputs, or for point_line, points with a bit output.
struct StarGame {
  int n_lines = 0;
  Variant variant = Variant::colored;
  std::vector<int> alice_lines;
  std::vector<int> bob_lines;
  std::vector<Pair> bob_points;

  std::size_t alice_input_count() const { return alice_lines.size(); }
  std::size_t bob_input_count() const;
  std::vector<int> alice_outputs(std::size_t xi) const;
  std::vector<int> bob_outputs(std::size_t yi) const;
  /// point_line pairs only count when Bob's point lies on Alice's line.
  bool input_allowed(std::size_t xi, std::size_t yi) const;
  std::size_t allowed_input_pairs() const;
  bool wins(std::size_t xi, std::size_t yi, int a, int b) const;
};

/// Default input sets: colored gives Alice 1..N-2 and Bob 3..N; line_line
/// gives both every line; point_line gives Alice every line and Bob every point.
StarGame make_game(int n, Variant v);
/// Colored game with explicit input colorings.
StarGame make_colored_game(int n, std::vector<int> alice_lines, std::vector<int> bob_lines);

/// Deterministic strategy: one output value per input index.
struct DetStrategy {
  std::vector<int> outputs;
  friend bool operator==(const DetStrategy&, const DetStrategy&) = default;
};

long long count_wins(const StarGame& g, const DetStrategy& alice, const DetStrategy& bob);
/// Weight 1 on every winning, allowed (input, output) combination.
SeparableProblem to_problem(const StarGame& g);

struct ClassicalResult {
  long long max_wins = 0;
  long long total = 0;
  DetStrategy alice, bob;
  bool certified = false;
  std::uint64_t examined = 0;
  Rational value() const { return make_rational(max_wins, total); }
};

ClassicalResult classical_optimum(const StarGame& g, const EngineOptions& opts = {});

/// p(a,b|x,y) for the maximally entangled state when Alice measures u and Bob
/// the conjugate of w: |<u,w>|^2 / (d |u|^2 |w|^2). The trace identity turns
/// Bob's conjugated projector into the plain overlap <u,w>.
CycRational outcome_probability(const CycVector& u, const CycVector& w, int d);

/// Alice's line and output with Bob's input (a line, or a point when
/// bob_line is 0) and output.
struct OutcomeRef {
  int alice_line = 0;
  int bob_line = 0;
  Pair bob_point;
  int a = 0;
  int b = 0;
  std::string to_string() const;
};

struct QuantumResult {
  CycRational value;
  std::optional<Rational> rational;
  /// Losing outcomes with nonzero probability.
  std::vector<OutcomeRef> offending;
  /// Inputs whose outcome probabilities are not complete (a = b = 0).
  std::vector<OutcomeRef> incomplete;
  std::uint64_t checked_pairs = 0;
  bool perfect() const { return offending.empty() && incomplete.empty() && rational && *rational == 1; }
};

/// Winning probability of the KS strategy, averaged over allowed inputs,
/// computed exactly in Q(zeta).
QuantumResult quantum_value(const StarGame& g, const KSSet& k);

/// Input lines for each player; a player's bases are the stars of its lines.
struct BKSPair {
  std::vector<int> sA;
  std::vector<int> sB;
};

struct BKSResult {
  SearchStatus status = SearchStatus::none;
  /// Chosen point per basis, as (line, label).
  std::vector<std::pair<int, Pair>> alice, bob;
  std::uint64_t nodes = 0;
};

/// Exactly one point per basis for each player; an Alice point and a Bob
/// point may not share exactly one index.
BKSResult bks_solve(const KSSet& k, const BKSPair& p);

struct BKSEnumeration {
  /// Removed-pair choices (Alice's, Bob's) whose complements form a B-KS pair.
  std::vector<std::pair<Pair, Pair>> bks;
  std::size_t examined = 0;
  bool complete = false;
};

BKSEnumeration optimal_bks_enumerate(const KSSet& k, std::optional<double> budget_seconds = std::nullopt);

}  // namespace starks
