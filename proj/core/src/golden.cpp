#include "starks/golden.hpp"

namespace starks::golden {

GHMatrix d3() {
  GHMatrix m;
  m.group_order = 3;
  m.lambda = 2;
  m.rows = {
      {0, 0, 0, 0, 0, 0}, {1, 2, 0, 2, 0, 1}, {1, 0, 2, 2, 1, 0},
      {0, 2, 2, 0, 1, 1}, {2, 2, 0, 1, 1, 0}, {2, 0, 2, 1, 0, 1},
  };
  return m;
}

const std::vector<LabeledRow>& j7_exponents() {
  static const std::vector<LabeledRow> rows{
    {1, 2, {0, 0, 0, 0, 0, 0}},
    {1, 3, {1, 2, 0, 2, 0, 1}},
    {1, 4, {1, 0, 2, 2, 1, 0}},
    {1, 5, {0, 2, 2, 0, 1, 1}},
    {1, 6, {2, 2, 0, 1, 1, 0}},
    {1, 7, {2, 0, 2, 1, 0, 1}},
    {2, 3, {2, 1, 0, 1, 0, 2}},
    {2, 4, {2, 0, 1, 1, 2, 0}},
    {2, 5, {0, 1, 1, 0, 2, 2}},
    {2, 6, {1, 1, 0, 2, 2, 0}},
    {2, 7, {1, 0, 1, 2, 0, 2}},
    {3, 4, {2, 2, 2, 1, 1, 1}},
    {3, 5, {1, 1, 2, 2, 1, 2}},
    {3, 6, {0, 1, 0, 0, 1, 1}},
    {3, 7, {0, 2, 2, 0, 0, 2}},
    {4, 5, {1, 2, 1, 2, 2, 1}},
    {4, 6, {0, 2, 2, 0, 2, 0}},
    {4, 7, {0, 0, 1, 0, 1, 1}},
    {5, 6, {2, 1, 2, 1, 2, 1}},
    {5, 7, {2, 2, 1, 1, 1, 2}},
    {6, 7, {1, 2, 2, 2, 1, 1}},
  };
  return rows;
}

const std::vector<LabeledRow>& j11_exponents() {
  static const std::vector<LabeledRow> rows{
    {1, 2, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {1, 3, {4, 0, 1, 2, 3, 3, 4, 0, 1, 2}},
    {1, 4, {1, 3, 0, 2, 4, 2, 4, 1, 3, 0}},
    {1, 5, {1, 4, 2, 0, 3, 2, 0, 3, 1, 4}},
    {1, 6, {4, 3, 2, 1, 0, 3, 2, 1, 0, 4}},
    {1, 7, {0, 4, 1, 1, 4, 0, 2, 3, 3, 2}},
    {1, 8, {1, 1, 4, 0, 4, 3, 3, 2, 0, 2}},
    {1, 9, {4, 0, 4, 1, 1, 2, 0, 2, 3, 3}},
    {1, 10, {4, 1, 1, 4, 0, 2, 3, 3, 2, 0}},
    {1, 11, {1, 4, 0, 4, 1, 3, 2, 0, 2, 3}},
    {2, 3, {3, 0, 2, 4, 1, 1, 3, 0, 2, 4}},
    {2, 4, {2, 1, 0, 4, 3, 4, 3, 2, 1, 0}},
    {2, 5, {2, 3, 4, 0, 1, 4, 0, 1, 2, 3}},
    {2, 6, {3, 1, 4, 2, 0, 1, 4, 2, 0, 3}},
    {2, 7, {0, 3, 2, 2, 3, 0, 4, 1, 1, 4}},
    {2, 8, {2, 2, 3, 0, 3, 1, 1, 4, 0, 4}},
    {2, 9, {3, 0, 3, 2, 2, 4, 0, 4, 1, 1}},
    {2, 10, {3, 2, 2, 3, 0, 4, 1, 1, 4, 0}},
    {2, 11, {2, 3, 0, 3, 2, 1, 4, 0, 4, 1}},
    {3, 4, {0, 3, 1, 4, 2, 0, 3, 1, 4, 2}},
    {3, 5, {0, 4, 3, 2, 1, 0, 4, 3, 2, 1}},
    {3, 6, {3, 3, 3, 3, 3, 1, 1, 1, 1, 1}},
    {3, 7, {4, 4, 2, 3, 2, 3, 1, 3, 4, 4}},
    {3, 8, {0, 1, 0, 2, 2, 1, 2, 2, 1, 4}},
    {3, 9, {3, 0, 0, 3, 4, 0, 4, 2, 4, 0}},
    {3, 10, {3, 1, 2, 1, 3, 0, 2, 3, 3, 2}},
    {3, 11, {0, 4, 1, 1, 4, 1, 1, 0, 3, 0}},
    {4, 5, {2, 2, 2, 2, 2, 4, 4, 4, 4, 4}},
    {4, 6, {0, 1, 2, 3, 4, 0, 1, 2, 3, 4}},
    {4, 7, {1, 2, 1, 3, 3, 2, 1, 4, 1, 2}},
    {4, 8, {2, 4, 4, 2, 3, 0, 2, 3, 3, 2}},
    {4, 9, {0, 3, 4, 3, 0, 4, 4, 3, 1, 3}},
    {4, 10, {0, 4, 1, 1, 4, 4, 2, 4, 0, 0}},
    {4, 11, {2, 2, 0, 1, 0, 0, 1, 1, 0, 3}},
    {5, 6, {0, 2, 4, 1, 3, 0, 2, 4, 1, 3}},
    {5, 7, {1, 3, 3, 1, 2, 2, 2, 1, 4, 1}},
    {5, 8, {2, 0, 1, 0, 2, 0, 3, 0, 1, 1}},
    {5, 9, {0, 4, 1, 1, 4, 4, 0, 0, 4, 2}},
    {5, 10, {0, 0, 3, 4, 3, 4, 3, 1, 3, 4}},
    {5, 11, {2, 3, 2, 4, 4, 0, 2, 3, 3, 2}},
    {6, 7, {4, 2, 3, 2, 4, 3, 4, 4, 3, 1}},
    {6, 8, {0, 4, 1, 1, 4, 1, 0, 3, 0, 1}},
    {6, 9, {3, 3, 1, 2, 1, 0, 2, 3, 3, 2}},
    {6, 10, {3, 4, 3, 0, 0, 0, 0, 4, 2, 4}},
    {6, 11, {0, 2, 2, 0, 1, 1, 4, 1, 2, 2}},
    {7, 8, {1, 0, 0, 1, 3, 3, 0, 0, 3, 4}},
    {7, 9, {4, 4, 0, 2, 0, 2, 2, 0, 1, 0}},
    {7, 10, {4, 0, 2, 0, 4, 2, 0, 1, 0, 2}},
    {7, 11, {1, 3, 1, 0, 0, 3, 4, 3, 0, 0}},
    {8, 9, {0, 1, 3, 1, 0, 0, 3, 4, 3, 0}},
    {8, 10, {0, 2, 0, 4, 4, 0, 1, 0, 2, 2}},
    {8, 11, {2, 0, 4, 4, 0, 1, 0, 2, 2, 0}},
    {9, 10, {3, 1, 0, 0, 1, 4, 3, 0, 0, 3}},
    {9, 11, {0, 4, 4, 0, 2, 0, 2, 2, 0, 1}},
    {10, 11, {0, 0, 1, 3, 1, 0, 0, 3, 4, 3}},
  };
  return rows;
}

const std::vector<LabeledRow>& j9_integers() {
  static const std::vector<LabeledRow> rows{
    {1, 2, {0, 0, 0, 0, 0, 0, 0, 1}},
    {1, 3, {0, 0, 0, 0, 0, 1, -1, 0}},
    {1, 4, {0, 0, 0, 1, 0, 0, 0, 0}},
    {1, 5, {0, 1, -1, 0, 0, 0, 0, 0}},
    {1, 6, {0, 1, 1, 0, 0, 0, 0, 0}},
    {1, 7, {1, 0, 0, 0, 0, 0, 0, 0}},
    {1, 8, {0, 0, 0, 0, 0, 1, 1, 0}},
    {1, 9, {0, 0, 0, 0, 1, 0, 0, 0}},
    {2, 3, {1, 1, 1, 1, 0, 0, 0, 0}},
    {2, 4, {1, 0, -1, 0, 0, 0, 0, 0}},
    {2, 5, {0, 0, 0, 0, 1, 0, 1, 0}},
    {2, 6, {1, -1, 1, -1, 0, 0, 0, 0}},
    {2, 7, {0, 0, 0, 0, 1, 0, -1, 0}},
    {2, 8, {0, 1, 0, -1, 0, 0, 0, 0}},
    {2, 9, {0, 0, 0, 0, 0, 1, 0, 0}},
    {3, 4, {0, 0, 0, 0, 1, 1, 1, -1}},
    {3, 5, {0, 0, 0, 0, -1, 1, 1, 1}},
    {3, 6, {1, 1, -1, -1, 0, 0, 0, 0}},
    {3, 7, {0, 0, 1, -1, 0, 0, 0, 0}},
    {3, 8, {0, 0, 0, 0, 1, 0, 0, 1}},
    {3, 9, {1, -1, 0, 0, 0, 0, 0, 0}},
    {4, 5, {0, 0, 0, 0, 1, 1, -1, 1}},
    {4, 6, {0, 0, 0, 0, 1, -1, 0, 0}},
    {4, 7, {0, 1, 0, 0, 0, 0, 0, 0}},
    {4, 8, {1, 0, 1, 0, 0, 0, 0, 0}},
    {4, 9, {0, 0, 0, 0, 0, 0, 1, 1}},
    {5, 6, {1, 0, 0, 1, 0, 0, 0, 0}},
    {5, 7, {0, 0, 0, 0, 0, 1, 0, -1}},
    {5, 8, {-1, 1, 1, 1, 0, 0, 0, 0}},
    {5, 9, {1, 1, 1, -1, 0, 0, 0, 0}},
    {6, 7, {0, 0, 0, 0, 1, 1, 1, 1}},
    {6, 8, {0, 0, 0, 0, 1, 1, -1, -1}},
    {6, 9, {0, 0, 0, 0, 0, 0, 1, -1}},
    {7, 8, {0, 0, 0, 0, 1, -1, 1, -1}},
    {7, 9, {0, 0, 1, 1, 0, 0, 0, 0}},
    {8, 9, {1, 1, -1, 1, 0, 0, 0, 0}},
  };
  return rows;
}

namespace {

KSSet from_exponent_rows(int n_lines, int order, const std::vector<LabeledRow>& rows) {
  KSSet k;
  k.n_lines = n_lines;
  k.dim = n_lines - 1;
  k.root_order = order;
  for (const auto& r : rows) k.add(Pair::of(r.i, r.j), CycVector::from_exponents(order, r.entries));
  k.add_star_bases();
  return k;
}

}  // namespace

KSSet j7_set() { return from_exponent_rows(7, 3, j7_exponents()); }
KSSet j11_set() { return from_exponent_rows(11, 5, j11_exponents()); }

KSSet j9_set() {
  KSSet k;
  k.n_lines = 9;
  k.dim = 8;
  k.root_order = 1;
  for (const auto& r : j9_integers()) {
    std::vector<long long> v(r.entries.begin(), r.entries.end());
    k.add(Pair::of(r.i, r.j), CycVector::from_integers(v));
  }
  k.add_star_bases();
  return k;
}

const Matrix6& m34() {
  static const Matrix6 m{{{0, 1, 0, 1, 1, 1}, {1, 0, 0, 1, 1, 1}, {0, 0, 1, 0, 0, 0},
                          {1, 1, 0, 0, 1, 1}, {1, 1, 0, 1, 0, 1}, {1, 1, 0, 1, 1, 0}}};
  return m;
}

const Matrix6& m35() {
  static const Matrix6 m{{{0, 1, 0, 1, 1, 1}, {1, 0, 0, 1, 1, 1}, {1, 1, 0, 0, 1, 1},
                          {0, 0, 1, 0, 0, 0}, {1, 1, 0, 1, 0, 1}, {1, 1, 0, 1, 1, 0}}};
  return m;
}

const Matrix6& m45() {
  static const Matrix6 m{{{0, 1, 1, 0, 1, 1}, {1, 0, 1, 0, 1, 1}, {1, 1, 0, 0, 1, 1},
                          {0, 0, 0, 1, 0, 0}, {1, 1, 1, 0, 0, 1}, {1, 1, 1, 0, 1, 0}}};
  return m;
}

}  // namespace starks::golden
