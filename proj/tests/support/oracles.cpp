#include "oracles.hpp"

#include <gmpxx.h>

#include <bit>
#include <cmath>
#include <numbers>

namespace oracle {

using namespace starks;

cplx eval(const CycInt& x) {
  cplx s = 0;
  const int n = x.order();
  for (int k = 0; k < n; ++k) {
    const double c = x.coeff(k).get_d();
    if (c != 0) s += c * std::polar(1.0, 2 * std::numbers::pi * k / n);
  }
  return s;
}

std::vector<cplx> eval(const CycVector& v) {
  std::vector<cplx> out;
  for (std::size_t t = 0; t < v.dim(); ++t) out.push_back(eval(v.entry(t)));
  return out;
}

cplx inner(const std::vector<cplx>& u, const std::vector<cplx>& v) {
  cplx s = 0;
  for (std::size_t t = 0; t < u.size(); ++t) s += std::conj(u[t]) * v[t];
  return s;
}

std::size_t float_rank(std::vector<std::vector<cplx>> rows, double tol) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t best = r;
    for (std::size_t i = r; i < rows.size(); ++i)
      if (std::abs(rows[i][c]) > std::abs(rows[best][c])) best = i;
    if (std::abs(rows[best][c]) < tol) continue;
    std::swap(rows[best], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      const cplx f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

std::size_t mpq_rank(const std::vector<std::vector<long long>>& input) {
  if (input.empty()) return 0;
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& row : input) {
    std::vector<mpq_class> r;
    for (long long x : row) r.emplace_back(static_cast<long>(x));
    rows.push_back(std::move(r));
  }
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const mpq_class f = rows[i][c] / rows[r][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

std::size_t mpq_affine_rank(const std::vector<std::vector<std::int8_t>>& points) {
  std::vector<std::vector<long long>> diff;
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<long long> d;
    for (std::size_t t = 0; t < points[i].size(); ++t) d.push_back(points[i][t] - points[0][t]);
    diff.push_back(std::move(d));
  }
  return mpq_rank(diff);
}

bool gh_by_counting(const GHMatrix& m) {
  const int g = m.group_order;
  const std::size_t n = m.rows.size();
  if (n != static_cast<std::size_t>(g * m.lambda)) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<int> count(static_cast<std::size_t>(g), 0);
      for (std::size_t t = 0; t < n; ++t) ++count[static_cast<std::size_t>(((m.rows[i][t] - m.rows[j][t]) % g + g) % g)];
      for (int c : count)
        if (c != m.lambda) return false;
    }
  return true;
}

bool shadamard_numeric(const SHadamard& s, double tol) {
  const std::size_t n = s.exponents.size();
  auto entry = [&](std::size_t i, std::size_t t, int power) {
    return std::polar(1.0, 2 * std::numbers::pi * power * s.exponents[i][t] / s.root_order);
  };
  for (int power : {1, 2})
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        cplx sum = 0;
        for (std::size_t t = 0; t < n; ++t) sum += entry(i, t, power) * std::conj(entry(j, t, power));
        const double want = i == j ? static_cast<double>(n) : 0.0;
        if (std::abs(sum - want) > tol) return false;
      }
  return true;
}

std::optional<std::vector<std::size_t>> ks_subsets(const KSSet& k) {
  const std::size_t m = k.vectors.size();
  if (m > 26) return std::nullopt;
  std::vector<std::uint32_t> masks;
  for (const auto& b : k.bases) {
    std::uint32_t mask = 0;
    for (auto i : b.members) mask |= 1u << i;
    masks.push_back(mask);
  }
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    bool ok = true;
    for (auto mask : masks)
      if (std::popcount(s & mask) != 1) {
        ok = false;
        break;
      }
    if (!ok) continue;
    std::vector<std::size_t> ones;
    for (std::size_t i = 0; i < m; ++i)
      if (s >> i & 1u) ones.push_back(i);
    return ones;
  }
  return std::nullopt;
}

long long joint_optimum(const StarGame& g) {
  const std::size_t X = g.alice_input_count(), Y = g.bob_input_count();
  std::vector<std::vector<int>> ao(X), bo(Y);
  for (std::size_t x = 0; x < X; ++x) ao[x] = g.alice_outputs(x);
  for (std::size_t y = 0; y < Y; ++y) bo[y] = g.bob_outputs(y);

  auto all = [](const std::vector<std::vector<int>>& outs) {
    std::vector<std::vector<int>> strategies{{}};
    for (const auto& o : outs) {
      std::vector<std::vector<int>> next;
      for (const auto& s : strategies)
        for (std::size_t i = 0; i < o.size(); ++i) {
          auto t = s;
          t.push_back(static_cast<int>(i));
          next.push_back(std::move(t));
        }
      strategies = std::move(next);
    }
    return strategies;
  };
  const auto A = all(ao), B = all(bo);

  std::size_t amax = 0, bmax = 0;
  for (const auto& o : ao) amax = std::max(amax, o.size());
  for (const auto& o : bo) bmax = std::max(bmax, o.size());
  std::vector<std::uint8_t> win(X * Y * amax * bmax, 0);
  for (std::size_t x = 0; x < X; ++x)
    for (std::size_t y = 0; y < Y; ++y)
      if (g.input_allowed(x, y))
        for (std::size_t a = 0; a < ao[x].size(); ++a)
          for (std::size_t b = 0; b < bo[y].size(); ++b)
            win[((x * Y + y) * amax + a) * bmax + b] = g.wins(x, y, ao[x][a], bo[y][b]);

  long long best = -1;
  for (const auto& sa : A)
    for (const auto& sb : B) {
      long long w = 0;
      for (std::size_t x = 0; x < X; ++x) {
        const std::uint8_t* row = &win[(x * Y) * amax * bmax + static_cast<std::size_t>(sa[x]) * bmax];
        for (std::size_t y = 0; y < Y; ++y) w += row[y * amax * bmax + static_cast<std::size_t>(sb[y])];
      }
      best = std::max(best, w);
    }
  return best;
}

double werner_value(const StarGame& g, const KSSet& k, double v) {
  const double d = k.dim;
  auto unit = [&](Pair p) {
    auto e = eval(k.at(p));
    const double norm = std::sqrt(std::real(inner(e, e)));
    for (auto& z : e) z /= norm;
    return e;
  };
  double total = 0;
  std::size_t inputs = 0;
  for (std::size_t x = 0; x < g.alice_input_count(); ++x)
    for (std::size_t y = 0; y < g.bob_input_count(); ++y) {
      if (!g.input_allowed(x, y)) continue;
      ++inputs;
      const int line = g.alice_lines[x];
      for (int a : g.alice_outputs(x)) {
        const auto u = unit(Pair::of(line, a));
        for (int b : g.bob_outputs(y)) {
          if (!g.wins(x, y, a, b)) continue;
          double pure, ranks;
          if (g.variant == Variant::point_line) {
            const double overlap = std::norm(inner(u, unit(g.bob_points[y]))) / d;
            pure = b == 1 ? overlap : 1.0 / d - overlap;
            ranks = b == 1 ? 1 : d - 1;
          } else {
            const int bl = g.bob_lines[y];
            pure = std::norm(inner(u, unit(Pair::of(bl, b)))) / d;
            ranks = 1;
          }
          total += v * pure + (1 - v) * ranks / (d * d);
        }
      }
    }
  return total / static_cast<double>(inputs);
}

std::optional<SrgParameters> srg_by_matrix(const SimpleGraph& g) {
  const auto n = static_cast<std::size_t>(g.n_vertices);
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (const auto& e : g.edges) a[static_cast<std::size_t>(e.lo - 1)][static_cast<std::size_t>(e.hi - 1)] = a[static_cast<std::size_t>(e.hi - 1)][static_cast<std::size_t>(e.lo - 1)] = 1;
  std::optional<int> k, lam, mu;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int s = 0;
      for (std::size_t t = 0; t < n; ++t) s += a[i][t] * a[t][j];
      std::optional<int>& slot = i == j ? k : a[i][j] ? lam : mu;
      if (slot && *slot != s) return std::nullopt;
      slot = s;
    }
  return SrgParameters{static_cast<int>(n), k.value_or(0), lam.value_or(0), mu.value_or(0)};
}

long long functional_value(const BellFunctional& f, const std::vector<int>& alice_pos, const std::vector<int>& bob_pos) {
  long long v = 0;
  for (std::size_t i = 0; i < f.alice_inputs.size(); ++i)
    for (std::size_t j = 0; j < f.bob_inputs.size(); ++j)
      v += bell_coefficient(f.n_lines, f.alice_inputs[i], f.bob_inputs[j], alice_pos[i], bob_pos[j]);
  return v;
}

}  // namespace oracle
