#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace starks {

/// A two-player objective sum_{x,y} w(x, y, f(x), g(y)) over deterministic
/// strategies f, g. Output choices are 0-based; padded slots beyond an
/// input's output count are never chosen.
class SeparableProblem {
 public:
  SeparableProblem() = default;
  SeparableProblem(std::vector<int> alice_outputs, std::vector<int> bob_outputs);

  std::size_t n_x() const { return a_count_.size(); }
  std::size_t n_y() const { return b_count_.size(); }
  int a_count(std::size_t x) const { return a_count_[x]; }
  int b_count(std::size_t y) const { return b_count_[y]; }
  int a_max() const { return a_max_; }
  int b_max() const { return b_max_; }

  int& weight(std::size_t x, std::size_t y, int a, int b) { return w_[offset(x, y, a, b)]; }
  int weight(std::size_t x, std::size_t y, int a, int b) const { return w_[offset(x, y, a, b)]; }

  long long value(const std::vector<int>& alice, const std::vector<int>& bob) const;
  /// Value of alice against Bob's best response; fills bob with the least
  /// best response per input when given.
  long long best_response_value(const std::vector<int>& alice, std::vector<int>* bob = nullptr) const;
  /// Number of Alice strategies, saturating at UINT64_MAX.
  std::uint64_t alice_strategy_count() const;

 private:
  std::size_t offset(std::size_t x, std::size_t y, int a, int b) const {
    return ((x * n_y() + y) * static_cast<std::size_t>(a_max_) + static_cast<std::size_t>(a)) * static_cast<std::size_t>(b_max_) + static_cast<std::size_t>(b);
  }

  std::vector<int> a_count_, b_count_;
  int a_max_ = 0, b_max_ = 0;
  std::vector<int> w_;
};

struct EngineOptions {
  std::optional<double> budget_seconds;
  /// Depth-first search with a per-input upper bound instead of plain
  /// enumeration; seeded with a coordinate-ascent value.
  bool branch_and_bound = false;
};

struct EngineResult {
  long long best = 0;
  std::vector<int> alice;
  std::vector<int> bob;
  bool certified = false;
  std::uint64_t examined = 0;
};

/// Exact maximum with the lexicographically least optimal Alice strategy
/// (input 0 most significant) and Bob's least best response. Results do
/// not depend on the thread count.
EngineResult maximize(const SeparableProblem& p, const EngineOptions& opts = {});

struct OptimalAlice {
  std::vector<int> alice;
  /// Every best response per Bob input.
  std::vector<std::vector<int>> bob_options;
};

struct SaturatingSet {
  long long target = 0;
  std::vector<OptimalAlice> strategies;
  bool complete = false;
  std::uint64_t examined = 0;
  std::uint64_t point_count() const;
};

/// All Alice strategies whose best-response value equals target, in
/// lexicographic order, each with all of Bob's optimal responses.
SaturatingSet enumerate_saturating(const SeparableProblem& p, long long target, const EngineOptions& opts = {});

}  // namespace starks
