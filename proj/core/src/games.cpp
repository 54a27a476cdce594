#include "starks/games.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>

#include "starks/parallel.hpp"

namespace starks {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::colored: return "colored";
    case Variant::line_line: return "line_line";
    case Variant::point_line: return "point_line";
  }
  return "?";
}

std::optional<Variant> parse_variant(const std::string& s) {
  if (s == "colored") return Variant::colored;
  if (s == "line_line" || s == "line-line") return Variant::line_line;
  if (s == "point_line" || s == "point-line") return Variant::point_line;
  return std::nullopt;
}

std::string OutcomeRef::to_string() const {
  const std::string bob_in = bob_line ? "line " + std::to_string(bob_line) : "point " + bob_point.to_string();
  return "x=line " + std::to_string(alice_line) + ", y=" + bob_in + ", a=" + std::to_string(a) + ", b=" + std::to_string(b);
}

std::size_t StarGame::bob_input_count() const { return variant == Variant::point_line ? bob_points.size() : bob_lines.size(); }

std::vector<int> StarGame::alice_outputs(std::size_t xi) const {
  std::vector<int> out;
  for (int j = 1; j <= n_lines; ++j)
    if (j != alice_lines[xi]) out.push_back(j);
  return out;
}

std::vector<int> StarGame::bob_outputs(std::size_t yi) const {
  if (variant == Variant::point_line) return {0, 1};
  std::vector<int> out;
  for (int j = 1; j <= n_lines; ++j)
    if (j != bob_lines[yi]) out.push_back(j);
  return out;
}

bool StarGame::input_allowed(std::size_t xi, std::size_t yi) const {
  return variant != Variant::point_line || bob_points[yi].contains(alice_lines[xi]);
}

std::size_t StarGame::allowed_input_pairs() const {
  std::size_t n = 0;
  for (std::size_t x = 0; x < alice_input_count(); ++x)
    for (std::size_t y = 0; y < bob_input_count(); ++y) n += input_allowed(x, y);
  return n;
}

bool StarGame::wins(std::size_t xi, std::size_t yi, int a, int b) const {
  const Pair alice_point = Pair::of(alice_lines[xi], a);
  if (variant == Variant::point_line) return (b == 1) == (alice_point == bob_points[yi]);
  const int shared = intersection_size(alice_point, Pair::of(bob_lines[yi], b));
  return shared == 0 || shared == 2;
}

namespace {

void require_lines(int n, const std::vector<int>& lines, const char* who) {
  for (int l : lines)
    if (l < 1 || l > n) throw InvalidArgument(std::string(who) + " line " + std::to_string(l) + " is outside 1.." + std::to_string(n));
}

}  // namespace

StarGame make_game(int n, Variant v) {
  if (n < 5 || n % 2 == 0) throw InvalidArgument("star games need an odd N >= 5, got " + std::to_string(n));
  StarGame g;
  g.n_lines = n;
  g.variant = v;
  switch (v) {
    case Variant::colored:
      for (int i = 1; i <= n - 2; ++i) g.alice_lines.push_back(i);
      for (int i = 3; i <= n; ++i) g.bob_lines.push_back(i);
      break;
    case Variant::line_line:
      for (int i = 1; i <= n; ++i) g.alice_lines.push_back(i), g.bob_lines.push_back(i);
      break;
    case Variant::point_line:
      for (int i = 1; i <= n; ++i) g.alice_lines.push_back(i);
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.bob_points.push_back({i, j});
      break;
  }
  return g;
}

StarGame make_colored_game(int n, std::vector<int> alice_lines, std::vector<int> bob_lines) {
  if (n < 5) throw InvalidArgument("star games need N >= 5");
  require_lines(n, alice_lines, "Alice");
  require_lines(n, bob_lines, "Bob");
  StarGame g;
  g.n_lines = n;
  g.variant = Variant::colored;
  g.alice_lines = std::move(alice_lines);
  g.bob_lines = std::move(bob_lines);
  return g;
}

long long count_wins(const StarGame& g, const DetStrategy& alice, const DetStrategy& bob) {
  long long wins = 0;
  for (std::size_t x = 0; x < g.alice_input_count(); ++x)
    for (std::size_t y = 0; y < g.bob_input_count(); ++y)
      if (g.input_allowed(x, y) && g.wins(x, y, alice.outputs[x], bob.outputs[y])) ++wins;
  return wins;
}

SeparableProblem to_problem(const StarGame& g) {
  std::vector<int> a_count, b_count;
  for (std::size_t x = 0; x < g.alice_input_count(); ++x) a_count.push_back(static_cast<int>(g.alice_outputs(x).size()));
  for (std::size_t y = 0; y < g.bob_input_count(); ++y) b_count.push_back(static_cast<int>(g.bob_outputs(y).size()));
  SeparableProblem p(a_count, b_count);
  for (std::size_t x = 0; x < g.alice_input_count(); ++x) {
    const auto ao = g.alice_outputs(x);
    for (std::size_t y = 0; y < g.bob_input_count(); ++y) {
      if (!g.input_allowed(x, y)) continue;
      const auto bo = g.bob_outputs(y);
      for (std::size_t a = 0; a < ao.size(); ++a)
        for (std::size_t b = 0; b < bo.size(); ++b)
          if (g.wins(x, y, ao[a], bo[b])) p.weight(x, y, static_cast<int>(a), static_cast<int>(b)) = 1;
    }
  }
  return p;
}

ClassicalResult classical_optimum(const StarGame& g, const EngineOptions& opts) {
  const auto p = to_problem(g);
  const auto r = maximize(p, opts);
  ClassicalResult out;
  out.max_wins = r.best;
  out.total = static_cast<long long>(g.allowed_input_pairs());
  out.certified = r.certified;
  out.examined = r.examined;
  for (std::size_t x = 0; x < r.alice.size(); ++x) out.alice.outputs.push_back(g.alice_outputs(x)[static_cast<std::size_t>(r.alice[x])]);
  for (std::size_t y = 0; y < r.bob.size(); ++y) out.bob.outputs.push_back(g.bob_outputs(y)[static_cast<std::size_t>(r.bob[y])]);
  return out;
}

CycRational outcome_probability(const CycVector& u, const CycVector& w, int d) {
  const auto nu = inner_product(u, u).as_integer();
  const auto nw = inner_product(w, w).as_integer();
  if (!nu || !nw || *nu == 0 || *nw == 0) throw InvalidArgument("outcome_probability needs nonzero vectors with rational norms");
  const CycInt ip = inner_product(u, w);
  const CycRational sq(ip * ip.conj());
  Rational scale(BigInt(1), BigInt(d) * *nu * *nw);
  scale.canonicalize();
  return sq * CycRational(sq.order(), scale);
}

QuantumResult quantum_value(const StarGame& g, const KSSet& k) {
  if (k.n_lines != g.n_lines) throw InvalidArgument("KS set and game have different line counts");
  const int d = k.dim;
  const int order = static_cast<int>(std::max(1, k.root_order));
  auto vec = [&](int line, int partner) -> const CycVector& { return k.at(Pair::of(line, partner)); };

  struct Item {
    std::size_t x, y;
  };
  std::vector<Item> items;
  for (std::size_t x = 0; x < g.alice_input_count(); ++x)
    for (std::size_t y = 0; y < g.bob_input_count(); ++y)
      if (g.input_allowed(x, y)) items.push_back({x, y});

  struct Partial {
    CycRational win;
    std::vector<OutcomeRef> offending;
    bool complete = true;
    std::uint64_t pairs = 0;
  };
  std::vector<Partial> parts(items.size());
  parallel_for(items.size(), [&](std::size_t i) {
    const auto [x, y] = items[i];
    auto& part = parts[i];
    const int xl = g.alice_lines[x];
    CycRational win(order), all(order);
    const Rational one_over_d = make_rational(1, d);
    if (g.variant == Variant::point_line) {
      const Pair p = g.bob_points[y];
      for (int a : g.alice_outputs(x)) {
        const CycRational p1 = outcome_probability(vec(xl, a), k.vectors[*k.find(p)], d).promoted_to(order);
        const CycRational p0 = CycRational(order, one_over_d) - p1;
        const bool hit = Pair::of(xl, a) == p;
        win += hit ? p1 : p0;
        all += p1;
        ++part.pairs;
        const CycRational& losing = hit ? p0 : p1;
        if (!losing.is_zero()) part.offending.push_back({xl, 0, p, a, hit ? 0 : 1});
      }
      // Bob's projector lies in Alice's basis, so its overlaps sum to 1/d.
      part.complete = all == CycRational(order, one_over_d);
    } else {
      const int yl = g.bob_lines[y];
      for (int a : g.alice_outputs(x))
        for (int b : g.bob_outputs(y)) {
          const CycRational pr = outcome_probability(vec(xl, a), vec(yl, b), d).promoted_to(order);
          all += pr;
          ++part.pairs;
          if (g.wins(x, y, a, b)) win += pr;
          else if (!pr.is_zero()) part.offending.push_back({xl, yl, {}, a, b});
        }
      part.complete = all == CycRational(order, Rational(1));
    }
    part.win = win;
  });

  QuantumResult out;
  CycRational total(order);
  for (std::size_t i = 0; i < items.size(); ++i) {
    total += parts[i].win;
    out.checked_pairs += parts[i].pairs;
    out.offending.insert(out.offending.end(), parts[i].offending.begin(), parts[i].offending.end());
    if (!parts[i].complete) {
      const auto [x, y] = items[i];
      if (g.variant == Variant::point_line) out.incomplete.push_back({g.alice_lines[x], 0, g.bob_points[y], 0, 0});
      else out.incomplete.push_back({g.alice_lines[x], g.bob_lines[y], {}, 0, 0});
    }
  }
  out.value = total * CycRational(order, make_rational(1, static_cast<long long>(items.size())));
  out.rational = out.value.as_rational();
  return out;
}

namespace {

class BKSSearch {
 public:
  BKSSearch(const KSSet& k, const BKSPair& p) {
    auto add_side = [&](const std::vector<int>& lines, int side) {
      for (int line : lines) {
        Var v{side, line, {}};
        for (int j = 1; j <= k.n_lines; ++j)
          if (j != line && k.find(Pair::of(line, j))) v.domain.push_back(Pair::of(line, j));
        if (v.domain.empty()) throw InvalidArgument("line " + std::to_string(line) + " has no basis in the KS set");
        vars_.push_back(std::move(v));
      }
    };
    add_side(p.sA, 0);
    add_side(p.sB, 1);
    // Alternate the two players so cross constraints prune early.
    std::vector<std::size_t> a, b;
    for (std::size_t i = 0; i < vars_.size(); ++i) (vars_[i].side == 0 ? a : b).push_back(i);
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
      if (i < a.size()) order_.push_back(a[i]);
      if (i < b.size()) order_.push_back(b[i]);
    }
    choice_.assign(vars_.size(), Pair{});
    live_.resize(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) live_[i].assign(vars_[i].domain.size(), 1);
  }

  BKSResult run() {
    BKSResult out;
    if (descend(0)) {
      out.status = SearchStatus::found;
      for (std::size_t i = 0; i < vars_.size(); ++i) (vars_[i].side == 0 ? out.alice : out.bob).emplace_back(vars_[i].line, choice_[i]);
    } else
      out.status = SearchStatus::none;
    out.nodes = nodes_;
    return out;
  }

 private:
  struct Var {
    int side;
    int line;
    std::vector<Pair> domain;
  };

  bool descend(std::size_t depth) {
    ++nodes_;
    if (depth == order_.size()) return true;
    const std::size_t v = order_[depth];
    for (std::size_t c = 0; c < vars_[v].domain.size(); ++c) {
      if (!live_[v][c]) continue;
      const Pair pick = vars_[v].domain[c];
      std::vector<std::pair<std::size_t, std::size_t>> trail;
      bool ok = true;
      for (std::size_t d = depth + 1; d < order_.size() && ok; ++d) {
        const std::size_t w = order_[d];
        if (vars_[w].side == vars_[v].side) continue;
        bool any = false;
        for (std::size_t e = 0; e < vars_[w].domain.size(); ++e) {
          if (!live_[w][e]) continue;
          if (intersection_size(pick, vars_[w].domain[e]) == 1) live_[w][e] = 0, trail.emplace_back(w, e);
          else any = true;
        }
        ok = any;
      }
      choice_[v] = pick;
      if (ok && descend(depth + 1)) return true;
      for (auto [w, e] : trail) live_[w][e] = 1;
    }
    return false;
  }

  std::vector<Var> vars_;
  std::vector<std::size_t> order_;
  std::vector<Pair> choice_;
  std::vector<std::vector<char>> live_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

BKSResult bks_solve(const KSSet& k, const BKSPair& p) {
  if (p.sA.empty() || p.sB.empty()) throw InvalidArgument("B-KS pairs need nonempty basis sets");
  return BKSSearch(k, p).run();
}

BKSEnumeration optimal_bks_enumerate(const KSSet& k, std::optional<double> budget_seconds) {
  const int n = k.n_lines;
  std::vector<Pair> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
  const std::size_t total = pairs.size() * pairs.size();
  const auto deadline = budget_seconds ? std::optional(std::chrono::steady_clock::now() +
                                                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(*budget_seconds)))
                                       : std::nullopt;
  std::vector<signed char> verdict(total, -1);
  std::atomic<bool> expired{false};
  parallel_for(total, [&](std::size_t idx) {
    if (expired.load(std::memory_order_relaxed)) return;
    if (deadline && std::chrono::steady_clock::now() > *deadline) {
      expired = true;
      return;
    }
    const Pair ra = pairs[idx / pairs.size()], rb = pairs[idx % pairs.size()];
    BKSPair p;
    for (int l = 1; l <= n; ++l) {
      if (!ra.contains(l)) p.sA.push_back(l);
      if (!rb.contains(l)) p.sB.push_back(l);
    }
    verdict[idx] = bks_solve(k, p).status == SearchStatus::none ? 1 : 0;
  });
  BKSEnumeration out;
  out.complete = true;
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (verdict[idx] < 0) {
      out.complete = false;
      continue;
    }
    ++out.examined;
    if (verdict[idx] == 1) out.bks.emplace_back(pairs[idx / pairs.size()], pairs[idx % pairs.size()]);
  }
  return out;
}

}  // namespace starks
