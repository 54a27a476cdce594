#include <doctest.h>

#include "starks/golden.hpp"
#include "starks/hadamard.hpp"

using namespace starks;

TEST_CASE("Jungnickel GH(3,2) is the printed D3") {
  const GHMatrix d = jungnickel_gh(3, 2);
  CHECK(d == golden::d3());
  CHECK(d.rows[0] == std::vector<int>(6, 0));
  CHECK(d.rows[1] == std::vector<int>{1, 2, 0, 2, 0, 1});
  CHECK(d.lambda == 2);
  CHECK(jungnickel_gh(3) == d);
}

TEST_CASE("Jungnickel preconditions") {
  CHECK_THROWS_AS(jungnickel_gh(3, 1), InvalidArgument);
  CHECK_THROWS_AS(jungnickel_gh(2, 1), InvalidArgument);
  CHECK_THROWS_AS(jungnickel_gh(9, 2), InvalidArgument);
  CHECK(smallest_nonresidue(7) == 3);
  CHECK(is_quadratic_residue(4, 5));
  CHECK_FALSE(is_quadratic_residue(2, 5));
}

TEST_CASE("multiplication tables") {
  const GHMatrix m = gh_mult_table(3);
  CHECK(m.rows == std::vector<std::vector<int>>{{0, 0, 0}, {0, 1, 2}, {0, 2, 1}});
  CHECK(verify_gh(gh_mult_table(5)).passed());
  std::vector<int> diff;
  for (int t = 0; t < 3; ++t) diff.push_back(((m.rows[1][t] - m.rows[2][t]) % 3 + 3) % 3);
  CHECK(diff == std::vector<int>{0, 2, 1});
}

TEST_CASE("Kronecker products") {
  const GHMatrix big = gh_kronecker(golden::d3(), gh_mult_table(3));
  CHECK(big.size() == 18);
  CHECK(big.lambda == 6);
  CHECK(verify_gh(big).passed());
  const GHMatrix nine = gh_kronecker(gh_mult_table(3), gh_mult_table(3));
  CHECK(nine.size() == 9);
  CHECK(nine.lambda == 3);
  CHECK(verify_gh(nine).passed());
  CHECK_THROWS_AS(gh_kronecker(gh_mult_table(3), gh_mult_table(5)), InvalidArgument);
}

TEST_CASE("verify_gh failures") {
  CHECK(verify_gh(golden::d3()).passed());
  GHMatrix bad = golden::d3();
  bad.rows[0][0] = 1;
  const auto r = verify_gh(bad);
  REQUIRE_FALSE(r.passed());
  for (const auto& v : r.violations) {
    REQUIRE(v.where.size() >= 2);
    CHECK((v.where[0] == 0 || v.where[1] == 0));
  }
  GHMatrix zeros{3, 1, {{0, 0}, {0, 0}}};
  CHECK_FALSE(verify_gh(zeros).passed());
}

TEST_CASE("S-Hadamard matrices") {
  const SHadamard s = gh_to_shadamard(golden::d3());
  CHECK(s.order == 6);
  CHECK(s.root_order == 3);
  CHECK(verify_shadamard(s).passed());
  CHECK(verify_shadamard(gh_to_shadamard(jungnickel_gh(5, 2))).passed());
  CHECK_THROWS_AS(gh_to_shadamard(GHMatrix{2, 1, {{0, 0}, {0, 1}}}), InvalidArgument);

  const SHadamard classical{2, 2, {{0, 0}, {0, 1}}, true};
  const auto r = verify_shadamard(classical);
  CHECK_FALSE(r.passed());
}

TEST_CASE("normalization") {
  const SHadamard s = gh_to_shadamard(golden::d3());
  CHECK(normalize_shadamard(s).exponents == s.exponents);
  SHadamard shifted = s;
  for (std::size_t i = 0; i < shifted.exponents.size(); ++i)
    for (std::size_t t = 0; t < shifted.exponents[i].size(); ++t)
      shifted.exponents[i][t] = (shifted.exponents[i][t] + static_cast<int>(t % 3)) % 3;
  CHECK(verify_shadamard(shifted).passed());
  CHECK(normalize_shadamard(shifted).exponents == s.exponents);
}
