#include <doctest.h>

#include "starks/bell.hpp"
#include "starks/golden.hpp"

using namespace starks;

TEST_CASE("positions and partners") {
  CHECK(position_to_partner(4, 3) == 3);
  CHECK(position_to_partner(4, 4) == 5);
  for (int x = 1; x <= 7; ++x)
    for (int a = 1; a <= 6; ++a) CHECK(partner_to_position(x, position_to_partner(x, a)) == a);
}

TEST_CASE("coefficient blocks at N = 7") {
  const BellFunctional f = build_functional(7);
  CHECK(f.alice_inputs == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(f.bob_inputs == std::vector<int>{3, 4, 5, 6, 7});
  CHECK(f.claimed_bound == 24);
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b) {
      CHECK(f.c(3, 4, a, b) == golden::m34()[a - 1][b - 1]);
      CHECK(f.c(3, 5, a, b) == golden::m35()[a - 1][b - 1]);
      CHECK(f.c(4, 5, a, b) == golden::m45()[a - 1][b - 1]);
      CHECK(f.c(4, 4, a, b) == (a == b ? 1 : 0));
    }
  CHECK(m_matrix_csv(f, 3, 4).substr(0, 12) == "0,1,0,1,1,1\n");
  CHECK_THROWS_AS(build_functional(8), InvalidArgument);
  CHECK_THROWS_AS(bell_coefficient(7, 0, 3, 1, 1), InvalidArgument);
}

TEST_CASE("local bounds and quantum values") {
  const BellFunctional f7 = build_functional(7);
  const auto lb = local_bound(f7);
  CHECK(lb.bound == 24);
  CHECK(lb.certified);
  CHECK(f7.value(lb.alice_pos, lb.bob_pos) == 24);
  CHECK(quantum_functional_value(f7, golden::j7_set()) == 25);

  const BellFunctional f9 = build_functional(9);
  CHECK(local_bound(f9).bound == 48);
  CHECK(quantum_functional_value(f9, golden::j9_set()) == 49);
}

TEST_CASE("Collins-Gisin coordinates") {
  const BellFunctional f = build_functional(7);
  CHECK(cg_dimension(f) == 675);
  const std::vector<int> alice{6, 6, 6, 6, 6}, bob{1, 2, 3, 4, 5};
  const auto v = to_cg(alice, bob, f);
  const std::size_t alice_base = 5 * 5 * 25;
  for (std::size_t i = alice_base; i < alice_base + 25; ++i) CHECK(v[i] == 0);
  for (std::size_t i = 0; i < alice_base; ++i) CHECK(v[i] == 0);

  const std::vector<int> a2{1, 2, 3, 4, 5}, b2{5, 4, 3, 2, 6};
  const auto w = to_cg(a2, b2, f);
  for (std::size_t x = 0; x < 5; ++x)
    for (std::size_t y = 0; y < 5; ++y)
      for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b)
          CHECK(w[cg_joint_index(f, x, y, a, b)] == (a == a2[x] && b == b2[y] ? 1 : 0));
}

TEST_CASE("forced zeros") {
  const BellFunctional f7 = build_functional(7);
  CHECK(forced_zero_positions(f7, common_line_pairs(f7)).size() == 72);
  const BellFunctional f9 = build_functional(9);
  CHECK(forced_zero_positions(f9, {{3, 4}, {4, 3}}).size() >= 36);
}

TEST_CASE("affine rank") {
  const std::vector<std::vector<std::int8_t>> pts{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}};
  CHECK(affine_rank(pts) == 2);
  CHECK(affine_rank({{1, 1}}) == 0);
}

TEST_CASE("non-tightness at N = 7") {
  const auto c = nontightness_certificate(build_functional(7));
  CHECK(c.complete());
  CHECK(c.bound == 24);
  CHECK(c.symmetry_lemma);
  CHECK(c.saturating_alice == 90);
  CHECK(c.saturating_points == 132);
  CHECK(c.forced_zeros >= 72);
  CHECK(c.forced_zeros_per_point);
  CHECK(c.dim_ns == 675);
  CHECK(c.affine_rank <= 675 - 72);
  CHECK(c.affine_rank < 674);
  CHECK_FALSE(c.tight);
}
