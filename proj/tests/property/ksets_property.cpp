#include <doctest.h>

#include "../support/seeds.hpp"
#include "starks/designs.hpp"
#include "starks/golden.hpp"
#include "starks/graph.hpp"
#include "starks/hadamard.hpp"
#include "starks/ksets.hpp"

using namespace starks;

namespace {

std::vector<KSSet> constructed_sets() {
  std::vector<KSSet> out{golden::j7_set(), golden::j9_set(), golden::j11_set()};
  for (int q : {3, 5, 7})
    for (int c = 1; c < q; ++c)
      if (!is_quadratic_residue(c, q)) out.push_back(lisonek_construct(gh_to_shadamard(jungnickel_gh(q, c))));
  out.push_back(factor_embed({ceg18(0), ceg18(1)}, k9_paley_factorization()));
  out.push_back(recursive_construct(golden::j7_set(), ag2_rbibd(7)));
  return out;
}

}  // namespace

TEST_CASE("constructed sets are orthogonal representations with full-rank bases") {
  for (const auto& k : constructed_sets()) {
    CAPTURE(k.n_lines);
    CHECK(or_check(k).passed());
    CHECK(verify_bases(k).passed());
    CHECK(k.dim == k.n_lines - 1);
    CHECK(parity_check(k));
  }
}

TEST_CASE("the dimension meets the clique number of J(N,2)") {
  for (int n : {7, 9, 11}) CHECK(clique_number(johnson_graph(n)) == n - 1);
}

TEST_CASE("parity implies no assignment") {
  for (const KSSet& k : {golden::j7_set(), golden::j9_set()}) {
    REQUIRE(parity_check(k));
    CHECK(ks_assignment_search(k, false).status == SearchStatus::none);
    CHECK(ks_assignment_search(k, true).status == SearchStatus::none);
  }
}

TEST_CASE("construction does not depend on pre-normalization") {
  auto r = testing_support::rng(5);
  for (auto [q, c] : {std::pair{3, 2}, std::pair{5, 2}, std::pair{5, 3}, std::pair{7, 3}}) {
    const SHadamard base = gh_to_shadamard(jungnickel_gh(q, c));
    const KSSet reference = lisonek_construct(base);
    std::uniform_int_distribution<int> e(0, base.root_order - 1);
    for (int trial = 0; trial < 5; ++trial) {
      SHadamard shifted = base;
      for (std::size_t t = 0; t < shifted.exponents[0].size(); ++t) {
        const int s = e(r);
        for (auto& row : shifted.exponents) row[t] = (row[t] + s) % base.root_order;
      }
      shifted.normalized = false;
      const KSSet from_shifted = lisonek_construct(shifted);
      CHECK(from_shifted == lisonek_construct(normalize_shadamard(shifted)));
      CHECK(from_shifted == reference);
    }
  }
}

TEST_CASE("golden equality") {
  CHECK(lisonek_construct(gh_to_shadamard(jungnickel_gh(3, 2))) == golden::j7_set());
  CHECK(lisonek_construct(gh_to_shadamard(jungnickel_gh(5, 2))) == golden::j11_set());
}
