#include <doctest.h>

#include "starks/games.hpp"
#include "starks/golden.hpp"
#include "starks/visibility.hpp"

using namespace starks;

namespace {

// {i, i+1} for odd i, {i, i-1} for even i; the top line N pairs with N-1.
int paired_partner(int n, int line) { return line == n ? n - 1 : line % 2 == 1 ? line + 1 : line - 1; }

DetStrategy partners(const std::vector<int>& lines, const std::function<int(int)>& pick) {
  DetStrategy s;
  for (int l : lines) s.outputs.push_back(pick(l));
  return s;
}

}  // namespace

TEST_CASE("game shapes") {
  const StarGame c = make_game(7, Variant::colored);
  CHECK(c.alice_lines == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(c.bob_lines == std::vector<int>{3, 4, 5, 6, 7});
  CHECK(c.allowed_input_pairs() == 25);
  CHECK(make_game(7, Variant::line_line).allowed_input_pairs() == 49);
  CHECK(make_game(7, Variant::point_line).allowed_input_pairs() == 42);
  CHECK_THROWS_AS(make_game(6, Variant::colored), InvalidArgument);
  CHECK(parse_variant("point-line") == Variant::point_line);
  CHECK_FALSE(parse_variant("nope"));
}

TEST_CASE("win predicate") {
  const StarGame c = make_game(7, Variant::colored);
  // Alice on line 3 (index 2), Bob on line 4 (index 1)
  CHECK(c.wins(2, 1, 4, 3));   // same point {3,4}
  CHECK(c.wins(2, 1, 1, 2));   // {1,3} and {2,4} disjoint
  CHECK_FALSE(c.wins(2, 1, 1, 1));  // {1,3} and {1,4} meet once
  const StarGame p = make_game(7, Variant::point_line);
  // Alice line 1 picks {1,2}; Bob holds a point on line 1
  for (std::size_t y = 0; y < p.bob_input_count(); ++y) {
    if (!p.input_allowed(0, y)) continue;
    const bool same = p.bob_points[y] == Pair::of(1, 2);
    CHECK(p.wins(0, y, 2, same ? 1 : 0));
    CHECK_FALSE(p.wins(0, y, 2, same ? 0 : 1));
  }
}

TEST_CASE("classical optima at N = 7") {
  const auto c = classical_optimum(make_game(7, Variant::colored));
  CHECK(c.max_wins == 24);
  CHECK(c.total == 25);
  CHECK(c.value() == make_rational(24, 25));
  CHECK(c.certified);
  CHECK(count_wins(make_game(7, Variant::colored), c.alice, c.bob) == 24);

  const auto l = classical_optimum(make_game(7, Variant::line_line));
  CHECK(l.value() == make_rational(45, 49));
  const auto p = classical_optimum(make_game(7, Variant::point_line));
  CHECK(p.value() == make_rational(41, 42));
}

TEST_CASE("the printed strategy wins 24 of 25") {
  const StarGame g = make_game(7, Variant::colored);
  const auto alice = partners(g.alice_lines, [](int l) { return golden::j7_alice_strategy[static_cast<std::size_t>(l)]; });
  const auto bob = partners(g.bob_lines, [](int l) { return golden::j7_bob_strategy[static_cast<std::size_t>(l)]; });
  CHECK(count_wins(g, alice, bob) == 24);
}

TEST_CASE("shifted colorings lose once") {
  for (int n : {7, 9}) {
    std::vector<int> a, b;
    for (int i = 1; i <= n; ++i) {
      if (i != n - 3 && i != n - 2) a.push_back(i);
      if (i != n - 1 && i != n) b.push_back(i);
    }
    const StarGame g = make_colored_game(n, a, b);
    const long long total = static_cast<long long>(g.allowed_input_pairs());
    auto pick = [n](int l) { return paired_partner(n, l); };
    CHECK(count_wins(g, partners(a, pick), partners(b, pick)) == total - 1);
  }
}

TEST_CASE("line_line shared strategy loses four times") {
  const StarGame g = make_game(7, Variant::line_line);
  auto pick = [](int i) { return i % 2 == 1 && i != 7 ? i + 1 : i - 1; };
  const auto s = partners(g.alice_lines, pick);
  CHECK(count_wins(g, s, s) == 45);
}

TEST_CASE("quantum values") {
  const auto q = quantum_value(make_game(7, Variant::colored), golden::j7_set());
  CHECK(q.perfect());
  CHECK(q.rational == Rational(1));
  // 25 input pairs, 6 x 6 outcomes each
  CHECK(q.checked_pairs == 900);
  CHECK(quantum_value(make_game(9, Variant::colored), golden::j9_set()).perfect());

  KSSet bad = golden::j7_set();
  bad.vectors[*bad.find(Pair::of(3, 4))] = bad.at(Pair::of(1, 3));
  const auto b = quantum_value(make_game(7, Variant::colored), bad);
  CHECK_FALSE(b.perfect());
  CHECK(b.value.evaluate().real() < 1.0);
  CHECK_FALSE(b.offending.empty());
}

TEST_CASE("B-KS pairs at N = 7") {
  const KSSet k = golden::j7_set();
  CHECK(bks_solve(k, {{3, 4, 5, 6, 7}, {1, 2, 5, 6, 7}}).status == SearchStatus::none);
  CHECK(bks_solve(k, {{1, 2, 3, 4}, {1, 2, 3, 4, 5, 6, 7}}).status == SearchStatus::found);
  // removed {1,2} and {2,3}
  CHECK(bks_solve(k, {{3, 4, 5, 6, 7}, {1, 4, 5, 6, 7}}).status == SearchStatus::found);

  const auto e = optimal_bks_enumerate(k);
  CHECK(e.complete);
  CHECK(e.examined == 441);
  CHECK(e.bks.size() == 210);
  for (const auto& [p, q] : e.bks) CHECK(intersection_size(p, q) == 0);
}

TEST_CASE("B-KS pairs at N = 9") {
  const auto e = optimal_bks_enumerate(golden::j9_set());
  CHECK(e.complete);
  CHECK(e.bks.size() == 36 * 21);
}

TEST_CASE("noisy values") {
  for (auto v : {Variant::colored, Variant::line_line, Variant::point_line}) CHECK(noisy_value(v, 6, Rational(1)) == 1);
  CHECK(noisy_value(Variant::colored, 6, make_rational(32, 35)) == make_rational(24, 25));
  CHECK(noisy_value(Variant::point_line, 6, Rational(0)) == make_rational(13, 18));
  CHECK_THROWS_AS(noisy_value(Variant::colored, 5, Rational(1)), InvalidArgument);
}

TEST_CASE("visibility thresholds") {
  const std::vector<std::tuple<Variant, int, Rational>> want{
      {Variant::colored, 6, make_rational(32, 35)},    {Variant::colored, 8, make_rational(285, 301)},
      {Variant::colored, 10, make_rational(632, 657)}, {Variant::line_line, 6, make_rational(29, 35)},
      {Variant::line_line, 8, make_rational(55, 63)},  {Variant::line_line, 10, make_rational(89, 99)},
      {Variant::point_line, 6, make_rational(32, 35)}, {Variant::point_line, 8, make_rational(59, 63)},
      {Variant::point_line, 10, make_rational(94, 99)}};
  for (const auto& [v, d, t] : want) {
    CAPTURE(d);
    CHECK(visibility_threshold(v, d) == t);
    CHECK(visibility_report(v, d).consistent());
  }
}
