#include "starks/designs.hpp"

#include <algorithm>
#include <set>

#include "starks/golden.hpp"
#include "starks/parallel.hpp"

namespace starks {

VerificationReport verify_factorization(const Factorization& f) {
  VerificationReport report;
  report.subject = std::to_string(f.factors.size()) + "-factor decomposition of a graph on " + std::to_string(f.host.n_vertices) + " vertices";
  const int n = f.host.n_vertices;
  std::set<Pair> seen;
  int common_degree = -1;
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    std::vector<int> deg(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& e : f.factors[i]) {
      ++report.checks;
      if (!f.host.has_edge(e.lo, e.hi)) report.fail("not-host-edge", {static_cast<long long>(i), e.lo, e.hi}, e.to_string() + " is not a host edge");
      if (!seen.insert(e).second) report.fail("overlap", {static_cast<long long>(i), e.lo, e.hi}, e.to_string() + " lies in two factors");
      if (e.lo >= 1 && e.hi <= n) ++deg[static_cast<std::size_t>(e.lo)], ++deg[static_cast<std::size_t>(e.hi)];
    }
    for (int v = 1; v <= n; ++v) {
      const int d = deg[static_cast<std::size_t>(v)];
      if (d == 0) report.fail("not-spanning", {static_cast<long long>(i), v}, "factor " + std::to_string(i) + " misses vertex " + std::to_string(v));
      if (common_degree == -1) common_degree = d;
      if (d != common_degree)
        report.fail("irregular", {static_cast<long long>(i), v, d}, "factor " + std::to_string(i) + " has degree " + std::to_string(d) + " at vertex " + std::to_string(v) + ", expected " + std::to_string(common_degree));
    }
  }
  for (const auto& e : f.host.edges)
    if (!seen.count(e)) report.fail("uncovered", {e.lo, e.hi}, e.to_string() + " lies in no factor");
  return report;
}

SimpleGraph paley_graph9() {
  // a + b i with i^2 = -1 over Z_3; squares of nonzero elements.
  auto mul = [](std::pair<int, int> x, std::pair<int, int> y) {
    return std::pair<int, int>{static_cast<int>(mod(x.first * y.first - x.second * y.second, 3)),
                               static_cast<int>(mod(x.first * y.second + x.second * y.first, 3))};
  };
  std::set<std::pair<int, int>> squares;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a || b) squares.insert(mul({a, b}, {a, b}));
  std::vector<Pair> edges;
  for (int u = 0; u < 9; ++u)
    for (int v = u + 1; v < 9; ++v) {
      const std::pair<int, int> diff{static_cast<int>(mod(u / 3 - v / 3, 3)), static_cast<int>(mod(u % 3 - v % 3, 3))};
      if (squares.count(diff)) edges.push_back({u + 1, v + 1});
    }
  return SimpleGraph(9, std::move(edges));
}

Factorization k9_paley_factorization() {
  Factorization f;
  f.host = complete_graph(9);
  f.factors.resize(2);
  for (const auto& row : golden::j9_integers()) {
    const bool first_block = std::any_of(row.entries.begin(), row.entries.begin() + 4, [](int x) { return x != 0; });
    f.factors[first_block ? 0 : 1].push_back(Pair::of(row.i, row.j));
  }
  for (auto& factor : f.factors) std::sort(factor.begin(), factor.end());
  return f;
}

KSSet ceg18(int copy) {
  if (copy != 0 && copy != 1) throw InvalidArgument("ceg18 copy must be 0 or 1");
  KSSet k;
  k.n_lines = 9;
  k.dim = 4;
  k.root_order = 1;
  std::vector<golden::LabeledRow> rows;
  for (const auto& row : golden::j9_integers()) {
    const auto begin = row.entries.begin() + 4 * copy;
    if (std::any_of(begin, begin + 4, [](int x) { return x != 0; })) rows.push_back(row);
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return Pair::of(a.i, a.j) < Pair::of(b.i, b.j); });
  for (const auto& row : rows) {
    std::vector<long long> a(row.entries.begin() + 4 * copy, row.entries.begin() + 4 * copy + 4);
    k.add(Pair::of(row.i, row.j), CycVector::from_integers(a));
  }
  k.add_star_bases();
  return k;
}

KSSet factor_embed(const std::vector<KSSet>& reps, const Factorization& f) {
  if (reps.size() != f.factors.size())
    throw InvalidArgument("factor_embed: " + std::to_string(reps.size()) + " representations for " + std::to_string(f.factors.size()) + " factors");
  if (reps.empty()) throw InvalidArgument("factor_embed: no factors");
  const int block = reps.front().dim;
  long long order = 1;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (reps[i].dim != block) throw InvalidArgument("factor_embed: representations have different dimensions");
    auto want = f.factors[i];
    auto have = reps[i].labels;
    std::sort(want.begin(), want.end());
    std::sort(have.begin(), have.end());
    if (want != have) throw InvalidArgument("factor_embed: representation " + std::to_string(i) + " does not label the edges of factor " + std::to_string(i));
    order = lcm_ll(order, reps[i].root_order);
  }

  KSSet out;
  out.n_lines = f.host.n_vertices;
  out.dim = block * static_cast<int>(reps.size());
  out.root_order = static_cast<int>(order);
  std::vector<std::pair<Pair, CycVector>> padded;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t e = 0; e < reps[i].labels.size(); ++e) {
      const CycVector src = reps[i].vectors[e].promoted(out.root_order);
      CycVector v(out.root_order, static_cast<std::size_t>(out.dim));
      for (std::size_t c = 0; c < src.dim(); ++c)
        if (!src.entry_structurally_zero(c)) v.set_entry(i * static_cast<std::size_t>(block) + c, src.entry(c));
      padded.emplace_back(reps[i].labels[e], std::move(v));
    }
  }
  std::sort(padded.begin(), padded.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [label, v] : padded) out.add(label, std::move(v));
  out.add_star_bases();
  return out;
}

RBIBD ag2_rbibd(int k) {
  if (k == 2 || !is_prime(k)) throw InvalidArgument("ag2_rbibd needs an odd prime, got " + std::to_string(k));
  RBIBD d;
  d.v = k * k;
  d.k = k;
  d.lambda = 1;
  d.r = k + 1;
  d.b = k * (k + 1);
  auto point = [k](int x, int y) { return 1 + k * x + y; };
  for (int m = 0; m <= k; ++m) {
    std::vector<std::size_t> cls;
    for (int c = 0; c < k; ++c) {
      std::vector<int> blk;
      for (int x = 0; x < k; ++x) blk.push_back(m < k ? point(x, static_cast<int>(mod(m * x + c, k))) : point(c, x));
      std::sort(blk.begin(), blk.end());
      cls.push_back(d.blocks.size());
      d.blocks.push_back(std::move(blk));
    }
    d.resolution.push_back(std::move(cls));
  }
  return d;
}

VerificationReport verify_rbibd(const RBIBD& d) {
  VerificationReport report;
  report.subject = "(" + std::to_string(d.v) + "," + std::to_string(d.k) + "," + std::to_string(d.lambda) + ")-RBIBD";
  const auto v = static_cast<std::size_t>(std::max(d.v, 0));
  if (static_cast<int>(d.blocks.size()) != d.b)
    report.fail("parameter-b", {d.b, static_cast<long long>(d.blocks.size())}, "block count differs from b");
  std::vector<int> replication(v + 1, 0);
  std::vector<std::vector<int>> together(v + 1, std::vector<int>(v + 1, 0));
  for (std::size_t bi = 0; bi < d.blocks.size(); ++bi) {
    const auto& blk = d.blocks[bi];
    ++report.checks;
    if (static_cast<int>(blk.size()) != d.k)
      report.fail("block-size", {static_cast<long long>(bi), static_cast<long long>(blk.size())}, "block " + std::to_string(bi) + " does not have k points");
    std::set<int> distinct(blk.begin(), blk.end());
    if (distinct.size() != blk.size()) report.fail("block-repeat", {static_cast<long long>(bi)}, "block " + std::to_string(bi) + " repeats a point");
    for (int p : blk) {
      if (p < 1 || p > d.v) {
        report.fail("point-range", {static_cast<long long>(bi), p}, "point " + std::to_string(p) + " out of range");
        continue;
      }
      ++replication[static_cast<std::size_t>(p)];
      for (int q : blk)
        if (q > p && q <= d.v) ++together[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
    }
  }
  for (int p = 1; p <= d.v; ++p) {
    ++report.checks;
    if (replication[static_cast<std::size_t>(p)] != d.r)
      report.fail("replication", {p, replication[static_cast<std::size_t>(p)]}, "point " + std::to_string(p) + " lies in " + std::to_string(replication[static_cast<std::size_t>(p)]) + " blocks, expected r");
    for (int q = p + 1; q <= d.v; ++q) {
      ++report.checks;
      if (together[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] != d.lambda)
        report.fail("balance", {p, q, together[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]},
                    "points " + std::to_string(p) + "," + std::to_string(q) + " share " + std::to_string(together[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]) + " blocks, expected lambda");
    }
  }
  std::vector<int> used(d.blocks.size(), 0);
  for (std::size_t c = 0; c < d.resolution.size(); ++c) {
    std::vector<int> hits(v + 1, 0);
    for (auto bi : d.resolution[c]) {
      if (bi >= d.blocks.size()) {
        report.fail("resolution-index", {static_cast<long long>(c), static_cast<long long>(bi)}, "class refers to a missing block");
        continue;
      }
      ++used[bi];
      for (int p : d.blocks[bi])
        if (p >= 1 && p <= d.v) ++hits[static_cast<std::size_t>(p)];
    }
    for (int p = 1; p <= d.v; ++p) {
      ++report.checks;
      if (hits[static_cast<std::size_t>(p)] != 1)
        report.fail("parallel-class", {static_cast<long long>(c), p}, "class " + std::to_string(c) + " covers point " + std::to_string(p) + " " + std::to_string(hits[static_cast<std::size_t>(p)]) + " times");
    }
  }
  for (std::size_t bi = 0; bi < used.size(); ++bi)
    if (used[bi] != 1) report.fail("resolution-cover", {static_cast<long long>(bi), used[bi]}, "block " + std::to_string(bi) + " is in " + std::to_string(used[bi]) + " classes");
  return report;
}

Factorization rbibd_to_factorization(const RBIBD& d) {
  if (d.lambda != 1) throw InvalidArgument("rbibd_to_factorization needs lambda = 1, got " + std::to_string(d.lambda));
  if (!verify_rbibd(d).passed()) throw InvalidArgument("rbibd_to_factorization: input is not a resolvable design");
  Factorization f;
  f.host = complete_graph(d.v);
  for (const auto& cls : d.resolution) {
    std::vector<Pair> factor;
    for (auto bi : cls) {
      const auto& blk = d.blocks[bi];
      for (std::size_t a = 0; a < blk.size(); ++a)
        for (std::size_t b = a + 1; b < blk.size(); ++b) factor.push_back(Pair::of(blk[a], blk[b]));
    }
    std::sort(factor.begin(), factor.end());
    f.factors.push_back(std::move(factor));
  }
  return f;
}

KSSet recursive_construct(const KSSet& base, const RBIBD& d) {
  const int k = d.k;
  if (base.n_lines != k || base.dim != k - 1)
    throw InvalidArgument("recursive_construct: base realizes J(" + std::to_string(base.n_lines) + ",2) in dimension " +
                          std::to_string(base.dim) + ", the design needs J(" + std::to_string(k) + ",2) in dimension " + std::to_string(k - 1));
  if (d.lambda != 1) throw InvalidArgument("recursive_construct: design must have lambda = 1");
  if ((k - 1) * static_cast<int>(d.resolution.size()) != d.v - 1)
    throw InvalidArgument("recursive_construct: (k-1) * classes = " + std::to_string((k - 1) * static_cast<int>(d.resolution.size())) +
                          " differs from v - 1 = " + std::to_string(d.v - 1));
  const Factorization f = rbibd_to_factorization(d);
  std::vector<KSSet> reps;
  for (const auto& cls : d.resolution) {
    KSSet rep;
    rep.n_lines = d.v;
    rep.dim = base.dim;
    rep.root_order = base.root_order;
    std::vector<std::pair<Pair, CycVector>> entries;
    for (auto bi : cls) {
      auto blk = d.blocks[bi];
      std::sort(blk.begin(), blk.end());
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
          entries.emplace_back(Pair::of(blk[static_cast<std::size_t>(a)], blk[static_cast<std::size_t>(b)]), base.at(Pair{a + 1, b + 1}));
    }
    std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [label, v] : entries) rep.add(label, std::move(v));
    reps.push_back(std::move(rep));
  }
  return factor_embed(reps, f);
}

}  // namespace starks
