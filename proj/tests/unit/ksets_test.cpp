#include <doctest.h>

#include <algorithm>

#include "starks/designs.hpp"
#include "starks/golden.hpp"
#include "starks/hadamard.hpp"
#include "starks/ksets.hpp"

using namespace starks;

namespace {

KSSet n7() { return lisonek_construct(gh_to_shadamard(jungnickel_gh(3, 2))); }
KSSet n11() { return lisonek_construct(gh_to_shadamard(jungnickel_gh(5, 2))); }

bool lists(const std::vector<std::pair<Pair, Pair>>& extra, Pair a, Pair b) {
  return std::find(extra.begin(), extra.end(), std::make_pair(a, b)) != extra.end();
}

}  // namespace

TEST_CASE("Lisonek construction reproduces the printed tables") {
  const KSSet k7 = n7();
  CHECK(k7 == golden::j7_set());
  CHECK(k7.vectors.size() == 21);
  CHECK(k7.at(Pair::of(1, 4)).exponents() == std::vector<int>{1, 0, 2, 2, 1, 0});

  const KSSet k11 = n11();
  CHECK(k11 == golden::j11_set());
  CHECK(k11.vectors.size() == 55);
  CHECK(k11.at(Pair::of(3, 4)).exponents() == std::vector<int>{0, 3, 1, 4, 2, 0, 3, 1, 4, 2});
}

TEST_CASE("Lisonek preconditions") {
  CHECK_THROWS_AS(lisonek_construct(SHadamard{3, 3, {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}}, true}), InvalidArgument);
}

TEST_CASE("basis b1 is orthogonal") {
  const KSSet k = n7();
  const auto& b = k.bases[0];
  CHECK(b.line == 1);
  CHECK(b.members.size() == 6);
  for (auto i : b.members)
    for (auto j : b.members)
      if (i != j) CHECK(orthogonal(k.vectors[i], k.vectors[j]));
}

TEST_CASE("verify_bases") {
  const auto r7 = verify_bases(golden::j7_set());
  CHECK(r7.passed());
  CHECK(golden::j7_set().bases.size() == 7);
  const KSSet k9 = golden::j9_set();
  CHECK(verify_bases(k9).passed());
  CHECK(k9.bases.size() == 9);
  for (const auto& b : k9.bases) CHECK(b.members.size() == 8);

  // v^{3,4} replaced by v^{1,3}
  KSSet bad = golden::j7_set();
  bad.vectors[*bad.find(Pair::of(3, 4))] = bad.at(Pair::of(1, 3));
  const auto r = verify_bases(bad);
  REQUIRE_FALSE(r.passed());
  std::vector<long long> lines;
  for (const auto& v : r.violations) lines.push_back(v.where.at(0));
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  CHECK(lines == std::vector<long long>{3, 4});
}

TEST_CASE("parity") {
  CHECK(parity_check(golden::j7_set()));
  CHECK(parity_check(golden::j11_set()));
  KSSet k = golden::j7_set();
  k.bases.pop_back();
  CHECK_FALSE(parity_check(k));
}

TEST_CASE("assignment search") {
  CHECK(ks_assignment_search(golden::j7_set(), false).status == SearchStatus::none);
  CHECK(ks_assignment_search(golden::j9_set(), false).status == SearchStatus::none);
  CHECK(ks_assignment_search(ceg18(0), false).status == SearchStatus::none);

  KSSet k = ceg18(0);
  k.bases.erase(k.bases.begin() + 4);
  const auto r = ks_assignment_search(k, false);
  REQUIRE(r.status == SearchStatus::found);
  for (const auto& b : k.bases)
    CHECK(std::count_if(b.members.begin(), b.members.end(),
                        [&](std::size_t i) { return std::find(r.ones.begin(), r.ones.end(), i) != r.ones.end(); }) == 1);
}

TEST_CASE("assignment search budget") {
  const auto r = ks_assignment_search(golden::j11_set(), false, 0.0);
  CHECK(r.status != SearchStatus::found);
}

TEST_CASE("orthogonality graphs and faithfulness") {
  const SimpleGraph g7 = orthogonality_graph(golden::j7_set());
  CHECK(g7.edges == johnson_graph(7).edges);
  CHECK(faithfulness_check(golden::j7_set()).empty());

  const auto extra11 = faithfulness_check(golden::j11_set());
  CHECK(lists(extra11, Pair::of(1, 2), Pair::of(3, 4)));
  const SimpleGraph g11 = orthogonality_graph(golden::j11_set());
  for (const auto& e : johnson_graph(11).edges) CHECK(g11.has_edge(e.lo, e.hi));
  CHECK(g11.edges.size() == johnson_graph(11).edges.size() + extra11.size());

  CHECK_FALSE(faithfulness_check(golden::j9_set()).empty());
  for (const auto& e : johnson_graph(9).edges) CHECK(orthogonality_graph(golden::j9_set()).has_edge(e.lo, e.hi));
}

TEST_CASE("OR check and basis incidence") {
  CHECK(or_check(golden::j7_set()).passed());
  const auto inc = golden::j9_set().basis_incidence();
  CHECK(std::all_of(inc.begin(), inc.end(), [](int c) { return c == 2; }));
}

TEST_CASE("set bookkeeping") {
  KSSet k;
  k.n_lines = 4;
  k.dim = 2;
  const std::vector<long long> v{1, 0};
  k.add(Pair::of(1, 2), CycVector::from_integers(v));
  CHECK_THROWS_AS(k.add(Pair::of(2, 1), CycVector::from_integers(v)), InvalidArgument);
  CHECK_THROWS_AS(k.add(Pair::of(1, 5), CycVector::from_integers(v)), InvalidArgument);
  CHECK(k.find(Pair::of(1, 2)) == std::size_t{0});
  CHECK_FALSE(k.find(Pair::of(3, 4)));
}
