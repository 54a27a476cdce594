#include "starks/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>

#include "starks/numbers.hpp"
#include "starks/parallel.hpp"

namespace starks {

SeparableProblem::SeparableProblem(std::vector<int> alice_outputs, std::vector<int> bob_outputs)
    : a_count_(std::move(alice_outputs)), b_count_(std::move(bob_outputs)) {
  for (int c : a_count_)
    if (c < 1) throw InvalidArgument("every Alice input needs an output");
  for (int c : b_count_)
    if (c < 1) throw InvalidArgument("every Bob input needs an output");
  a_max_ = a_count_.empty() ? 0 : *std::max_element(a_count_.begin(), a_count_.end());
  b_max_ = b_count_.empty() ? 0 : *std::max_element(b_count_.begin(), b_count_.end());
  w_.assign(n_x() * n_y() * static_cast<std::size_t>(a_max_) * static_cast<std::size_t>(b_max_), 0);
}

long long SeparableProblem::value(const std::vector<int>& alice, const std::vector<int>& bob) const {
  long long v = 0;
  for (std::size_t x = 0; x < n_x(); ++x)
    for (std::size_t y = 0; y < n_y(); ++y) v += weight(x, y, alice[x], bob[y]);
  return v;
}

long long SeparableProblem::best_response_value(const std::vector<int>& alice, std::vector<int>* bob) const {
  long long total = 0;
  if (bob) bob->assign(n_y(), 0);
  for (std::size_t y = 0; y < n_y(); ++y) {
    long long best = std::numeric_limits<long long>::min();
    for (int b = 0; b < b_count_[y]; ++b) {
      long long s = 0;
      for (std::size_t x = 0; x < n_x(); ++x) s += weight(x, y, alice[x], b);
      if (s > best) {
        best = s;
        if (bob) (*bob)[y] = b;
      }
    }
    total += best;
  }
  return total;
}

std::uint64_t SaturatingSet::point_count() const {
  std::uint64_t total = 0;
  for (const auto& s : strategies) {
    std::uint64_t prod = 1;
    for (const auto& o : s.bob_options) prod *= o.size();
    total += prod;
  }
  return total;
}

std::uint64_t SeparableProblem::alice_strategy_count() const {
  std::uint64_t total = 1;
  for (int c : a_count_) {
    if (total > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(c)) return std::numeric_limits<std::uint64_t>::max();
    total *= static_cast<std::uint64_t>(c);
  }
  return total;
}

namespace {

using Clock = std::chrono::steady_clock;

std::optional<Clock::time_point> deadline_from(const EngineOptions& opts) {
  if (!opts.budget_seconds) return std::nullopt;
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*opts.budget_seconds));
}

// Odometer over Alice strategies with running column sums S[y][b].
class Walker {
 public:
  explicit Walker(const SeparableProblem& p) : p_(p), digits_(p.n_x(), 0), s_(p.n_y() * static_cast<std::size_t>(p.b_max()), 0) {}

  void seek(std::uint64_t index) {
    for (std::size_t x = p_.n_x(); x-- > 0;) {
      const auto c = static_cast<std::uint64_t>(p_.a_count(x));
      digits_[x] = static_cast<int>(index % c);
      index /= c;
    }
    std::fill(s_.begin(), s_.end(), 0);
    for (std::size_t x = 0; x < p_.n_x(); ++x) apply(x, digits_[x], +1);
  }

  void next() {
    for (std::size_t x = p_.n_x(); x-- > 0;) {
      apply(x, digits_[x], -1);
      if (++digits_[x] < p_.a_count(x)) {
        apply(x, digits_[x], +1);
        return;
      }
      digits_[x] = 0;
      apply(x, 0, +1);
    }
  }

  long long column(std::size_t y, int b) const { return s_[y * static_cast<std::size_t>(p_.b_max()) + static_cast<std::size_t>(b)]; }

  long long value() const {
    long long total = 0;
    for (std::size_t y = 0; y < p_.n_y(); ++y) {
      long long best = column(y, 0);
      for (int b = 1; b < p_.b_count(y); ++b) best = std::max(best, column(y, b));
      total += best;
    }
    return total;
  }

  const std::vector<int>& digits() const { return digits_; }

 private:
  void apply(std::size_t x, int a, int sign) {
    for (std::size_t y = 0; y < p_.n_y(); ++y)
      for (int b = 0; b < p_.b_count(y); ++b) s_[y * static_cast<std::size_t>(p_.b_max()) + static_cast<std::size_t>(b)] += sign * p_.weight(x, y, a, b);
  }

  const SeparableProblem& p_;
  std::vector<int> digits_;
  std::vector<long long> s_;
};

struct ChunkBest {
  long long value = std::numeric_limits<long long>::min();
  std::vector<int> alice;
  std::uint64_t examined = 0;
  bool finished = false;
};

EngineResult finish(const SeparableProblem& p, std::vector<ChunkBest>& chunks, bool all_finished) {
  EngineResult out;
  out.best = std::numeric_limits<long long>::min();
  for (const auto& c : chunks) {
    out.examined += c.examined;
    if (c.alice.empty()) continue;
    if (c.value > out.best || (c.value == out.best && c.alice < out.alice)) out.best = c.value, out.alice = c.alice;
  }
  out.certified = all_finished;
  if (!out.alice.empty()) p.best_response_value(out.alice, &out.bob);
  return out;
}

EngineResult exhaustive(const SeparableProblem& p, const EngineOptions& opts) {
  const std::uint64_t total = p.alice_strategy_count();
  if (total == std::numeric_limits<std::uint64_t>::max()) throw InvalidArgument("strategy space too large to enumerate");
  const auto deadline = deadline_from(opts);
  const std::uint64_t chunk = std::max<std::uint64_t>(1, std::min<std::uint64_t>(1 << 14, total / 64 + 1));
  const std::size_t n_chunks = static_cast<std::size_t>((total + chunk - 1) / chunk);
  std::vector<ChunkBest> best(n_chunks);
  std::atomic<bool> expired{false};
  parallel_for(n_chunks, [&](std::size_t c) {
    if (expired.load(std::memory_order_relaxed)) return;
    if (deadline && Clock::now() > *deadline) {
      expired = true;
      return;
    }
    const std::uint64_t begin = c * chunk, end = std::min(total, begin + chunk);
    Walker w(p);
    w.seek(begin);
    auto& mine = best[c];
    for (std::uint64_t i = begin; i < end; ++i) {
      const long long v = w.value();
      if (v > mine.value) mine.value = v, mine.alice = w.digits();
      ++mine.examined;
      if (i + 1 < end) w.next();
    }
    mine.finished = true;
  });
  const bool all = std::all_of(best.begin(), best.end(), [](const ChunkBest& b) { return b.finished; });
  return finish(p, best, all);
}

std::vector<int> coordinate_ascent(const SeparableProblem& p) {
  std::vector<int> alice(p.n_x(), 0);
  long long current = p.best_response_value(alice);
  for (bool improved = true; improved;) {
    improved = false;
    for (std::size_t x = 0; x < p.n_x(); ++x)
      for (int a = 0; a < p.a_count(x); ++a) {
        if (a == alice[x]) continue;
        const int keep = alice[x];
        alice[x] = a;
        const long long v = p.best_response_value(alice);
        if (v > current) current = v, improved = true;
        else alice[x] = keep;
      }
  }
  return alice;
}

class BranchAndBound {
 public:
  BranchAndBound(const SeparableProblem& p, long long floor, std::atomic<long long>& shared, std::optional<Clock::time_point> deadline)
      : p_(p), shared_(shared), floor_(floor), deadline_(deadline), digits_(p.n_x(), 0),
        s_(p.n_y() * static_cast<std::size_t>(p.b_max()), 0) {
    // rest_[x][y][b] = sum over x' >= x of max_a w(x', y, a, b).
    const std::size_t stride = p.n_y() * static_cast<std::size_t>(p.b_max());
    rest_.assign((p.n_x() + 1) * stride, 0);
    for (std::size_t x = p.n_x(); x-- > 0;)
      for (std::size_t y = 0; y < p.n_y(); ++y)
        for (int b = 0; b < p.b_count(y); ++b) {
          int m = std::numeric_limits<int>::min();
          for (int a = 0; a < p.a_count(x); ++a) m = std::max(m, p.weight(x, y, a, b));
          const std::size_t o = y * static_cast<std::size_t>(p.b_max()) + static_cast<std::size_t>(b);
          rest_[x * stride + o] = rest_[(x + 1) * stride + o] + m;
        }
  }

  void run(const std::vector<int>& prefix, ChunkBest& out) {
    for (std::size_t x = 0; x < prefix.size(); ++x) digits_[x] = prefix[x], apply(x, prefix[x], +1);
    out_ = &out;
    dfs(prefix.size());
    out.finished = !timed_out_;
  }

 private:
  long long bound(std::size_t depth) const {
    const std::size_t stride = p_.n_y() * static_cast<std::size_t>(p_.b_max());
    long long total = 0;
    for (std::size_t y = 0; y < p_.n_y(); ++y) {
      long long best = std::numeric_limits<long long>::min();
      for (int b = 0; b < p_.b_count(y); ++b) {
        const std::size_t o = y * static_cast<std::size_t>(p_.b_max()) + static_cast<std::size_t>(b);
        best = std::max(best, s_[o] + rest_[depth * stride + o]);
      }
      total += best;
    }
    return total;
  }

  void dfs(std::size_t depth) {
    if (timed_out_) return;
    if ((++nodes_ & 4095) == 0 && deadline_ && Clock::now() > *deadline_) {
      timed_out_ = true;
      return;
    }
    if (bound(depth) < std::max(floor_, shared_.load(std::memory_order_relaxed))) return;
    if (depth == p_.n_x()) {
      ++out_->examined;
      const long long v = bound(depth);
      if (v > out_->value) {
        out_->value = v;
        out_->alice = digits_;
        long long seen = shared_.load();
        while (v > seen && !shared_.compare_exchange_weak(seen, v)) {}
      }
      return;
    }
    for (int a = 0; a < p_.a_count(depth); ++a) {
      digits_[depth] = a;
      apply(depth, a, +1);
      dfs(depth + 1);
      apply(depth, a, -1);
      if (timed_out_) return;
    }
  }

  void apply(std::size_t x, int a, int sign) {
    for (std::size_t y = 0; y < p_.n_y(); ++y)
      for (int b = 0; b < p_.b_count(y); ++b) s_[y * static_cast<std::size_t>(p_.b_max()) + static_cast<std::size_t>(b)] += sign * p_.weight(x, y, a, b);
  }

  const SeparableProblem& p_;
  std::atomic<long long>& shared_;
  long long floor_;
  std::optional<Clock::time_point> deadline_;
  std::vector<int> digits_;
  std::vector<long long> s_;
  std::vector<long long> rest_;
  ChunkBest* out_ = nullptr;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

EngineResult branch_and_bound(const SeparableProblem& p, const EngineOptions& opts) {
  const auto seed = coordinate_ascent(p);
  const long long floor = p.best_response_value(seed);
  const auto deadline = deadline_from(opts);

  // Prefixes over the first two inputs become independent work items.
  std::vector<std::vector<int>> prefixes{{}};
  for (std::size_t x = 0; x < std::min<std::size_t>(2, p.n_x()); ++x) {
    std::vector<std::vector<int>> grown;
    for (const auto& pre : prefixes)
      for (int a = 0; a < p.a_count(x); ++a) {
        auto g = pre;
        g.push_back(a);
        grown.push_back(std::move(g));
      }
    prefixes = std::move(grown);
  }
  std::atomic<long long> shared{floor};
  std::vector<ChunkBest> best(prefixes.size());
  parallel_for(prefixes.size(), [&](std::size_t i) {
    BranchAndBound search(p, floor, shared, deadline);
    search.run(prefixes[i], best[i]);
  });
  const bool all = std::all_of(best.begin(), best.end(), [](const ChunkBest& b) { return b.finished; });
  auto out = finish(p, best, all);
  if (out.alice.empty()) {
    out.alice = seed;
    out.best = floor;
    p.best_response_value(out.alice, &out.bob);
  }
  return out;
}

}  // namespace

EngineResult maximize(const SeparableProblem& p, const EngineOptions& opts) {
  if (p.n_x() == 0 || p.n_y() == 0) throw InvalidArgument("maximize needs inputs for both players");
  return opts.branch_and_bound ? branch_and_bound(p, opts) : exhaustive(p, opts);
}

SaturatingSet enumerate_saturating(const SeparableProblem& p, long long target, const EngineOptions& opts) {
  const std::uint64_t total = p.alice_strategy_count();
  if (total == std::numeric_limits<std::uint64_t>::max()) throw InvalidArgument("strategy space too large to enumerate");
  const auto deadline = deadline_from(opts);
  const std::uint64_t chunk = std::max<std::uint64_t>(1, std::min<std::uint64_t>(1 << 14, total / 64 + 1));
  const std::size_t n_chunks = static_cast<std::size_t>((total + chunk - 1) / chunk);
  std::vector<std::vector<OptimalAlice>> found(n_chunks);
  std::vector<char> finished(n_chunks, 0);
  std::vector<std::uint64_t> examined(n_chunks, 0);
  std::atomic<bool> expired{false};
  parallel_for(n_chunks, [&](std::size_t c) {
    if (expired.load(std::memory_order_relaxed)) return;
    if (deadline && Clock::now() > *deadline) {
      expired = true;
      return;
    }
    const std::uint64_t begin = c * chunk, end = std::min(total, begin + chunk);
    Walker w(p);
    w.seek(begin);
    for (std::uint64_t i = begin; i < end; ++i) {
      if (w.value() == target) {
        OptimalAlice s{w.digits(), std::vector<std::vector<int>>(p.n_y())};
        for (std::size_t y = 0; y < p.n_y(); ++y) {
          long long best = w.column(y, 0);
          for (int b = 1; b < p.b_count(y); ++b) best = std::max(best, w.column(y, b));
          for (int b = 0; b < p.b_count(y); ++b)
            if (w.column(y, b) == best) s.bob_options[y].push_back(b);
        }
        found[c].push_back(std::move(s));
      }
      ++examined[c];
      if (i + 1 < end) w.next();
    }
    finished[c] = 1;
  });
  SaturatingSet out;
  out.target = target;
  out.complete = std::all_of(finished.begin(), finished.end(), [](char f) { return f != 0; });
  for (std::size_t c = 0; c < n_chunks; ++c) {
    out.examined += examined[c];
    for (auto& s : found[c]) out.strategies.push_back(std::move(s));
  }
  return out;
}

}  // namespace starks
