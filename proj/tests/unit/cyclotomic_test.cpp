#include <doctest.h>

#include "starks/cyclotomic.hpp"
#include "starks/cyclotomic_field.hpp"
#include "starks/golden.hpp"

using namespace starks;

namespace {

std::vector<long long> coeffs(const CycInt& x) {
  std::vector<long long> out;
  for (const auto& c : x.coeffs()) out.push_back(c.get_si());
  return out;
}

CycInt one_plus_zeta_plus_zeta2() { return CycInt::root(3, 0) + CycInt::root(3, 1) + CycInt::root(3, 2); }

}  // namespace

TEST_CASE("roots of unity") {
  CHECK(CycInt::root(1, 0).as_integer() == BigInt(1));
  CHECK(coeffs(CycInt::root(3, 2)) == std::vector<long long>{0, 0, 1});
  CHECK(coeffs(CycInt::root(3, 5)) == std::vector<long long>{0, 0, 1});
  CHECK(coeffs(CycInt::root(3, -1)) == std::vector<long long>{0, 0, 1});
}

TEST_CASE("cyclotomic polynomials") {
  auto as_ll = [](int n) {
    std::vector<long long> out;
    for (const auto& c : cyclotomic_polynomial(n)) out.push_back(c.get_si());
    return out;
  };
  CHECK(as_ll(1) == std::vector<long long>{-1, 1});
  CHECK(as_ll(3) == std::vector<long long>{1, 1, 1});
  CHECK(as_ll(8) == std::vector<long long>{1, 0, 0, 0, 1});
  CHECK(as_ll(12) == std::vector<long long>{1, 0, -1, 0, 1});
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(5) == 4);
}

TEST_CASE("zero test") {
  CHECK(one_plus_zeta_plus_zeta2().is_zero());
  CHECK_FALSE((CycInt::root(5, 0) + CycInt::root(5, 1)).is_zero());
  CHECK((CycInt::integer(3, 3) * one_plus_zeta_plus_zeta2() - CycInt(3)).is_zero());
  CHECK(CycInt(7).is_zero());
  // zeta_4^2 = -1
  CHECK((CycInt::root(4, 2) + CycInt::integer(4, 1)).is_zero());
  CHECK(CycInt::root(6, 3) == CycInt::integer(6, -1));
}

TEST_CASE("conjugation and promotion") {
  const CycInt z = CycInt::root(5, 2);
  CHECK(z.conj() == CycInt::root(5, 3));
  CHECK((z * z.conj()).as_integer() == BigInt(1));
  CHECK(CycInt::root(3, 1).promoted(6) == CycInt::root(6, 2));
  CHECK_THROWS_AS(CycInt::root(3, 1).promoted(5), InvalidArgument);
}

TEST_CASE("inner products from the N = 7 table") {
  const KSSet k = golden::j7_set();
  const auto& v14 = k.at(Pair::of(1, 4));
  CHECK(inner_product(v14, v14).as_integer() == BigInt(6));
  CHECK(v14.exponents() == std::vector<int>{1, 0, 2, 2, 1, 0});
  CHECK(orthogonal(k.at(Pair::of(1, 3)), v14));

  const std::vector<long long> e1{1, 0, 0, 0}, e2{0, 1, 0, 0};
  CHECK(inner_product(CycVector::from_integers(e1), CycVector::from_integers(e2)).is_zero());
}

TEST_CASE("inner product conventions") {
  const std::vector<int> a{1, 0}, b{0, 0};
  const auto u = CycVector::from_exponents(3, a), w = CycVector::from_exponents(3, b);
  // conjugate-linear in the first argument
  CHECK(inner_product(u, w) == CycInt::root(3, 2) + CycInt::root(3, 0));
  CHECK(inner_product(w, u) == CycInt::root(3, 1) + CycInt::root(3, 0));
  // order-1 entries embed into any order
  const std::vector<long long> ones{1, 1};
  CHECK(inner_product(CycVector::from_integers(ones), w).as_integer() == BigInt(2));
  const std::vector<long long> three{1, 1, 1};
  CHECK_THROWS_AS(inner_product(CycVector::from_integers(three), w), InvalidArgument);
}

TEST_CASE("field arithmetic") {
  const CycRational z(CycInt::root(5, 1));
  const CycRational w = CycRational(5, make_rational(1, 3)) + z;
  CHECK((w * w.inverse()).as_rational() == Rational(1));
  CHECK((z * z.conj()).as_rational() == Rational(1));
  CHECK(CycRational(CycInt::root(3, 1)).promoted_to(6) == CycRational(CycInt::root(6, 2)));
  CHECK_THROWS(CycRational(5).inverse());
}

TEST_CASE("rank") {
  const KSSet k = golden::j7_set();
  std::vector<CycVector> basis;
  for (auto i : k.bases[0].members) basis.push_back(k.vectors[i]);
  CHECK(rank(basis) == 6);
  basis.push_back(k.vectors[k.bases[1].members[2]]);
  CHECK(rank(basis) == 6);
  const std::vector<long long> a{1, 2, 3}, b{2, 4, 6};
  const std::vector<CycVector> dependent{CycVector::from_integers(a), CycVector::from_integers(b)};
  CHECK(rank(dependent) == 1);
}
