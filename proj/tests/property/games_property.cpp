#include <doctest.h>

#include "../support/oracles.hpp"
#include "../support/seeds.hpp"
#include "starks/bell.hpp"
#include "starks/games.hpp"
#include "starks/golden.hpp"
#include "starks/visibility.hpp"

using namespace starks;

TEST_CASE("colored optimum is (N-2)^2 - 1 and matches the Bell bound") {
  for (int n : {7, 9}) {
    const auto c = classical_optimum(make_game(n, Variant::colored));
    CHECK(c.max_wins == (n - 2) * (n - 2) - 1);
    CHECK(c.max_wins == local_bound(build_functional(n)).bound);
  }
}

TEST_CASE("separable best response equals joint enumeration at N = 7") {
  const StarGame g = make_game(7, Variant::colored);
  CHECK(oracle::joint_optimum(g) == classical_optimum(g).max_wins);
}

TEST_CASE("noisy value is affine in V") {
  for (auto v : {Variant::colored, Variant::line_line, Variant::point_line})
    for (int d : {6, 8, 10}) {
      const Rational a = make_rational(1, 7), b = make_rational(3, 5), c = make_rational(9, 11);
      const Rational fa = noisy_value(v, d, a), fb = noisy_value(v, d, b), fc = noisy_value(v, d, c);
      CHECK((fb - fa) * (c - a) == (fc - fa) * (b - a));
    }
}

TEST_CASE("quantum value is 1 exactly when every losing pair is orthogonal") {
  auto r = testing_support::rng(7);
  const KSSet base = golden::j7_set();
  const StarGame g = make_game(7, Variant::colored);
  std::uniform_int_distribution<std::size_t> pick(0, base.vectors.size() - 1);
  int perfect = 0;
  for (int trial = 0; trial < 30; ++trial) {
    KSSet k = base;
    if (trial > 0) k.vectors[pick(r)] = base.vectors[pick(r)];
    bool all_orthogonal = true;
    for (std::size_t x = 0; x < g.alice_input_count(); ++x)
      for (std::size_t y = 0; y < g.bob_input_count(); ++y)
        for (int a : g.alice_outputs(x))
          for (int b : g.bob_outputs(y))
            if (!g.wins(x, y, a, b) &&
                !orthogonal(k.at(Pair::of(g.alice_lines[x], a)), k.at(Pair::of(g.bob_lines[y], b))))
              all_orthogonal = false;
    const bool q = quantum_value(g, k).perfect();
    perfect += q;
    CHECK(q == all_orthogonal);
  }
  CHECK(perfect >= 1);
  CHECK(perfect < 30);
}

TEST_CASE("no assignment for the full basis pair") {
  for (const KSSet& k : {golden::j7_set(), golden::j9_set(), golden::j11_set()}) {
    std::vector<int> all;
    for (int i = 1; i <= k.n_lines; ++i) all.push_back(i);
    CHECK(bks_solve(k, {all, all}).status == SearchStatus::none);
  }
}

TEST_CASE("line_line witnesses at 45/49 lose exactly four times") {
  const StarGame g = make_game(7, Variant::line_line);
  const auto c = classical_optimum(g);
  CHECK(c.total - count_wins(g, c.alice, c.bob) == 4);
  DetStrategy shared;
  for (int i : g.alice_lines) shared.outputs.push_back(i % 2 == 1 && i != 7 ? i + 1 : i - 1);
  CHECK(c.total - count_wins(g, shared, shared) == 4);
}
