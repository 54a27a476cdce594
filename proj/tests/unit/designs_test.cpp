#include <doctest.h>

#include <algorithm>

#include "starks/designs.hpp"
#include "starks/golden.hpp"
#include "starks/graph.hpp"
#include "starks/ksets.hpp"

using namespace starks;

TEST_CASE("Johnson graphs") {
  const SimpleGraph j7 = johnson_graph(7);
  CHECK(j7.n_vertices == 21);
  CHECK(j7.edges.size() == 105);
  CHECK(clique_number(j7) == 6);
  CHECK(johnson_graph(4).n_vertices == 6);
  CHECK(strong_regularity(johnson_graph(4)) == SrgParameters{6, 4, 2, 4});
  CHECK_THROWS_AS(johnson_graph(3), InvalidArgument);

  // the star C_i = {ij : j != i} is a maximum clique
  for (int i = 1; i <= 7; ++i) {
    std::vector<int> star;
    for (int v = 1; v <= j7.n_vertices; ++v)
      if (j7.labels[static_cast<std::size_t>(v - 1)].contains(i)) star.push_back(v);
    CHECK(star.size() == 6);
    for (int a : star)
      for (int b : star)
        if (a < b) CHECK(j7.has_edge(a, b));
  }
}

TEST_CASE("line graphs") {
  CHECK(are_isomorphic(line_graph(complete_graph(7)), johnson_graph(7)));
  const SimpleGraph k3 = line_graph(complete_graph(3));
  CHECK(k3.n_vertices == 3);
  CHECK(k3.edges.size() == 3);
  const SimpleGraph path(3, {Pair::of(1, 2), Pair::of(2, 3)});
  const SimpleGraph lp = line_graph(path);
  CHECK(lp.n_vertices == 2);
  CHECK(lp.edges.size() == 1);
}

TEST_CASE("Paley factorization of K9") {
  const Factorization f = k9_paley_factorization();
  CHECK(verify_factorization(f).passed());
  REQUIRE(f.factors.size() == 2);
  const SimpleGraph a(9, f.factors[0]), b(9, f.factors[1]);
  CHECK(strong_regularity(a) == SrgParameters{9, 4, 1, 2});
  CHECK(strong_regularity(b) == SrgParameters{9, 4, 1, 2});
  CHECK(are_isomorphic(a, b));
  CHECK(are_isomorphic(a, paley_graph9()));
  CHECK(f.factors[0].size() + f.factors[1].size() == 36);
}

TEST_CASE("the 18-vector set") {
  const KSSet c = ceg18(0);
  CHECK(c.vectors.size() == 18);
  CHECK(c.dim == 4);
  CHECK(c.bases.size() == 9);
  CHECK(verify_bases(c).passed());
  const auto inc = c.basis_incidence();
  CHECK(std::all_of(inc.begin(), inc.end(), [](int x) { return x == 2; }));
  const std::vector<long long> a{1, 0, 0, 0};
  CHECK(c.at(Pair::of(1, 7)) == CycVector::from_integers(a));
  CHECK_FALSE(c.find(Pair::of(1, 2)).has_value());
  CHECK(ks_assignment_search(c, false).status == SearchStatus::none);
  CHECK_THROWS_AS(ceg18(2), InvalidArgument);
}

TEST_CASE("factor embedding rebuilds the N = 9 table") {
  const KSSet k = factor_embed({ceg18(0), ceg18(1)}, k9_paley_factorization());
  CHECK(k == golden::j9_set());
  CHECK(k.dim == 8);
  CHECK(k.vectors.size() == 36);
  // vectors from different blocks are orthogonal
  const auto f = k9_paley_factorization();
  CHECK(orthogonal(k.at(f.factors[0][0]), k.at(f.factors[1][0])));
  CHECK_THROWS_AS(factor_embed({ceg18(1), ceg18(0)}, f), InvalidArgument);
}

TEST_CASE("affine planes") {
  const RBIBD d3 = ag2_rbibd(3);
  CHECK(d3.v == 9);
  CHECK(d3.b == 12);
  CHECK(d3.resolution.size() == 4);
  CHECK(verify_rbibd(d3).passed());
  const RBIBD d5 = ag2_rbibd(5);
  CHECK(d5.v == 25);
  CHECK(d5.b == 30);
  CHECK(d5.resolution.size() == 6);
  CHECK(verify_rbibd(d5).passed());
  CHECK_THROWS_AS(ag2_rbibd(4), InvalidArgument);

  RBIBD broken = d3;
  broken.blocks[0][0] = broken.blocks[1][0];
  CHECK_FALSE(verify_rbibd(broken).passed());
}

TEST_CASE("RBIBD factorizations") {
  const Factorization f = rbibd_to_factorization(ag2_rbibd(3));
  CHECK(verify_factorization(f).passed());
  REQUIRE(f.factors.size() == 4);
  for (const auto& fac : f.factors) {
    const SimpleGraph g(9, fac);
    CHECK(fac.size() == 9);
    for (int v = 1; v <= 9; ++v) CHECK(g.degree(v) == 2);
    CHECK(clique_number(g) == 3);
  }
}

TEST_CASE("recursive construction") {
  const KSSet k49 = recursive_construct(golden::j7_set(), ag2_rbibd(7));
  CHECK(k49.n_lines == 49);
  CHECK(k49.dim == 48);
  CHECK(k49.vectors.size() == 49 * 48 / 2);
  CHECK(verify_bases(k49).passed());
  CHECK(parity_check(k49));
  CHECK(or_check(k49).passed());
  CHECK_THROWS_AS(recursive_construct(golden::j7_set(), ag2_rbibd(5)), InvalidArgument);
  CHECK_THROWS_AS(recursive_construct(ceg18(0), ag2_rbibd(3)), InvalidArgument);
}
