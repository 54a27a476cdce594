#include "starks/bell.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "starks/games.hpp"
#include "starks/parallel.hpp"

namespace starks {

int position_to_partner(int line, int position) { return position < line ? position : position + 1; }
int partner_to_position(int line, int partner) { return partner < line ? partner : partner - 1; }

namespace {

int c_prime(int a, int b, int x, int y) {
  int c = 0;
  c += a != b;
  c += (a == b) && (x <= b && b <= y - 1);
  c -= (a == b - 1) && (x < b && b < y);
  c -= (a == y - 1) && (b != x);
  c -= (a != y - 1) && (b == x);
  return c;
}

}  // namespace

int bell_coefficient(int n, int x, int y, int a, int b) {
  if (x < 1 || x > n || y < 1 || y > n || a < 1 || a > n - 1 || b < 1 || b > n - 1)
    throw InvalidArgument("bell coefficient index out of range");
  if (x == y) return a == b;
  if (x < y) return c_prime(a, b, x, y);
  return c_prime(b, a, y, x);
}

std::vector<int> BellFunctional::common_lines() const {
  std::vector<int> out;
  for (int x : alice_inputs)
    if (std::find(bob_inputs.begin(), bob_inputs.end(), x) != bob_inputs.end()) out.push_back(x);
  return out;
}

SeparableProblem BellFunctional::problem() const {
  SeparableProblem p(std::vector<int>(alice_inputs.size(), outputs), std::vector<int>(bob_inputs.size(), outputs));
  for (std::size_t xi = 0; xi < alice_inputs.size(); ++xi)
    for (std::size_t yi = 0; yi < bob_inputs.size(); ++yi)
      for (int a = 1; a <= outputs; ++a)
        for (int b = 1; b <= outputs; ++b) p.weight(xi, yi, a - 1, b - 1) = c(alice_inputs[xi], bob_inputs[yi], a, b);
  return p;
}

long long BellFunctional::value(const std::vector<int>& alice_pos, const std::vector<int>& bob_pos) const {
  long long v = 0;
  for (std::size_t xi = 0; xi < alice_inputs.size(); ++xi)
    for (std::size_t yi = 0; yi < bob_inputs.size(); ++yi) v += c(alice_inputs[xi], bob_inputs[yi], alice_pos[xi], bob_pos[yi]);
  return v;
}

BellFunctional build_functional(int n) {
  if (n < 7 || n % 2 == 0) throw InvalidArgument("the Bell functional needs an odd N >= 7, got " + std::to_string(n));
  BellFunctional f;
  f.n_lines = n;
  f.outputs = n - 1;
  for (int i = 1; i <= n - 2; ++i) f.alice_inputs.push_back(i);
  for (int i = 3; i <= n; ++i) f.bob_inputs.push_back(i);
  f.claimed_bound = static_cast<long long>(n - 2) * (n - 2) - 1;
  return f;
}

std::string m_matrix_csv(const BellFunctional& f, int x, int y) {
  std::ostringstream out;
  for (int a = 1; a <= f.outputs; ++a) {
    for (int b = 1; b <= f.outputs; ++b) out << (b > 1 ? "," : "") << f.c(x, y, a, b);
    out << "\n";
  }
  return out.str();
}

LocalBound local_bound(const BellFunctional& f, const EngineOptions& opts) {
  const auto r = maximize(f.problem(), opts);
  LocalBound out;
  out.bound = r.best;
  out.certified = r.certified;
  for (int a : r.alice) out.alice_pos.push_back(a + 1);
  for (int b : r.bob) out.bob_pos.push_back(b + 1);
  return out;
}

Rational quantum_functional_value(const BellFunctional& f, const KSSet& k) {
  const int order = std::max(1, k.root_order);
  CycRational total(order);
  for (int x : f.alice_inputs)
    for (int y : f.bob_inputs)
      for (int a = 1; a <= f.outputs; ++a)
        for (int b = 1; b <= f.outputs; ++b) {
          const int c = f.c(x, y, a, b);
          if (c == 0) continue;
          const auto& u = k.at(Pair::of(x, position_to_partner(x, a)));
          const auto& w = k.at(Pair::of(y, position_to_partner(y, b)));
          total += outcome_probability(u, w, k.dim).promoted_to(order) * CycRational(order, Rational(c));
        }
  const auto q = total.as_rational();
  if (!q) throw InvalidArgument("functional value is not rational: " + total.to_string());
  return *q;
}

std::size_t cg_dimension(const BellFunctional& f) {
  const std::size_t X = f.alice_inputs.size(), Y = f.bob_inputs.size(), m = static_cast<std::size_t>(f.outputs) - 1;
  return X * Y * m * m + X * m + Y * m;
}

std::size_t cg_joint_index(const BellFunctional& f, std::size_t xi, std::size_t yi, int a, int b) {
  const std::size_t Y = f.bob_inputs.size(), m = static_cast<std::size_t>(f.outputs) - 1;
  return ((xi * Y + yi) * m + static_cast<std::size_t>(a - 1)) * m + static_cast<std::size_t>(b - 1);
}

std::vector<std::int8_t> to_cg(const std::vector<int>& alice_pos, const std::vector<int>& bob_pos, const BellFunctional& f) {
  const std::size_t X = f.alice_inputs.size(), Y = f.bob_inputs.size(), m = static_cast<std::size_t>(f.outputs) - 1;
  if (alice_pos.size() != X || bob_pos.size() != Y) throw InvalidArgument("strategy sizes do not match the functional");
  std::vector<std::int8_t> v(cg_dimension(f), 0);
  for (std::size_t xi = 0; xi < X; ++xi)
    for (std::size_t yi = 0; yi < Y; ++yi)
      if (alice_pos[xi] <= static_cast<int>(m) && bob_pos[yi] <= static_cast<int>(m)) v[cg_joint_index(f, xi, yi, alice_pos[xi], bob_pos[yi])] = 1;
  const std::size_t alice_base = X * Y * m * m, bob_base = alice_base + X * m;
  for (std::size_t xi = 0; xi < X; ++xi)
    if (alice_pos[xi] <= static_cast<int>(m)) v[alice_base + xi * m + static_cast<std::size_t>(alice_pos[xi] - 1)] = 1;
  for (std::size_t yi = 0; yi < Y; ++yi)
    if (bob_pos[yi] <= static_cast<int>(m)) v[bob_base + yi * m + static_cast<std::size_t>(bob_pos[yi] - 1)] = 1;
  return v;
}

std::size_t affine_rank(const std::vector<std::vector<std::int8_t>>& points) {
  if (points.size() < 2) return 0;
  const std::size_t dim = points.front().size();
  std::vector<std::vector<BigInt>> rows;
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<BigInt> r(dim);
    for (std::size_t k = 0; k < dim; ++k) r[k] = points[i][k] - points[0][k];
    rows.push_back(std::move(r));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const auto& p = rows[rank];
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      const BigInt f = rows[i][col], g = p[col];
      BigInt content = 0;
      for (std::size_t k = col; k < dim; ++k) {
        rows[i][k] = rows[i][k] * g - p[k] * f;
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), rows[i][k].get_mpz_t());
      }
      if (content > 1)
        for (std::size_t k = col; k < dim; ++k) mpz_divexact(rows[i][k].get_mpz_t(), rows[i][k].get_mpz_t(), content.get_mpz_t());
    }
    ++rank;
  }
  return rank;
}

std::vector<std::pair<int, int>> common_line_pairs(const BellFunctional& f) {
  std::vector<std::pair<int, int>> out;
  for (int x : f.common_lines())
    for (int y : f.common_lines())
      if (x != y) out.emplace_back(x, y);
  return out;
}

std::vector<ForcedZero> forced_zero_positions(const BellFunctional& f, const std::vector<std::pair<int, int>>& line_pairs) {
  std::vector<ForcedZero> out;
  for (auto [x, y] : line_pairs)
    for (int a = 1; a < f.outputs; ++a)
      for (int b = 1; b < f.outputs; ++b)
        if (f.c(x, y, a, b) == 0) out.push_back({x, y, a, b});
  return out;
}

namespace {

std::size_t index_of(const std::vector<int>& v, int x) {
  return static_cast<std::size_t>(std::find(v.begin(), v.end(), x) - v.begin());
}

}  // namespace

NonTightnessCertificate nontightness_certificate(const BellFunctional& f, const EngineOptions& opts) {
  NonTightnessCertificate cert;
  cert.n_lines = f.n_lines;
  cert.dim_ns = cg_dimension(f);

  const auto lb = local_bound(f, opts);
  cert.bound = lb.bound;
  cert.bound_certified = lb.certified;
  if (lb.bound != f.claimed_bound)
    cert.notes.push_back("local bound " + std::to_string(lb.bound) + " differs from the claimed " + std::to_string(f.claimed_bound));

  // Over deterministic outputs that win both diagonals (x',x') and (y',y').
  cert.symmetry_lemma = true;
  for (auto [x, y] : common_line_pairs(f))
    for (int ax = 1; ax <= f.outputs; ++ax)
      for (int ay = 1; ay <= f.outputs; ++ay) {
        if (f.c(x, x, ax, ax) != 1 || f.c(y, y, ay, ay) != 1) continue;
        if (f.c(x, y, ax, ay) != 1 && f.c(y, x, ay, ax) == 1) cert.symmetry_lemma = false;
      }

  const auto sat = enumerate_saturating(f.problem(), lb.bound, opts);
  cert.enumeration_complete = sat.complete;
  cert.saturating_alice = sat.strategies.size();

  std::vector<std::vector<std::int8_t>> points;
  for (const auto& s : sat.strategies) {
    std::vector<int> alice(s.alice.size());
    for (std::size_t i = 0; i < alice.size(); ++i) alice[i] = s.alice[i] + 1;
    std::vector<std::size_t> pick(s.bob_options.size(), 0);
    for (;;) {
      std::vector<int> bob(pick.size());
      for (std::size_t y = 0; y < pick.size(); ++y) bob[y] = s.bob_options[y][pick[y]] + 1;
      for (auto [x, y] : common_line_pairs(f)) {
        const std::size_t xa = index_of(f.alice_inputs, x), ya = index_of(f.alice_inputs, y);
        const std::size_t xb = index_of(f.bob_inputs, x), yb = index_of(f.bob_inputs, y);
        if (f.c(x, y, alice[xa], bob[yb]) != 1 && f.c(y, x, alice[ya], bob[xb]) == 1) cert.symmetry_lemma = false;
      }
      points.push_back(to_cg(alice, bob, f));
      std::size_t y = 0;
      while (y < pick.size() && ++pick[y] == s.bob_options[y].size()) pick[y++] = 0;
      if (y == pick.size()) break;
    }
  }
  cert.saturating_points = points.size();

  const auto zeros = forced_zero_positions(f, common_line_pairs(f));
  cert.forced_zeros = zeros.size();
  cert.forced_zeros_per_point = true;
  for (const auto& z : zeros) {
    const std::size_t at = cg_joint_index(f, index_of(f.alice_inputs, z.x), index_of(f.bob_inputs, z.y), z.a, z.b);
    for (const auto& p : points)
      if (p[at] != 0) cert.forced_zeros_per_point = false;
  }
  if (!cert.forced_zeros_per_point) cert.notes.push_back("some saturating point is nonzero at a forced-zero coordinate");

  for (std::size_t k = 0; k < cert.dim_ns; ++k)
    if (std::all_of(points.begin(), points.end(), [k](const auto& p) { return p[k] == 0; })) ++cert.zero_on_all;

  cert.affine_rank = affine_rank(points);
  cert.tight = !(cert.affine_rank < cert.dim_ns - 1);
  return cert;
}

}  // namespace starks
