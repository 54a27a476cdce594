#include "starks/ksets.hpp"

#include <algorithm>
#include <chrono>

#include "starks/cyclotomic_field.hpp"
#include "starks/parallel.hpp"

namespace starks {

void KSSet::grow_index() {
  const auto n = static_cast<std::size_t>(n_lines) + 1;
  if (index_.size() == n * n) return;
  index_.assign(n * n, -1);
  for (std::size_t i = 0; i < labels.size(); ++i)
    index_[static_cast<std::size_t>(labels[i].lo) * n + static_cast<std::size_t>(labels[i].hi)] = static_cast<std::int32_t>(i);
}

void KSSet::add(Pair label, CycVector v) {
  if (label.lo < 1 || label.hi > n_lines || label.lo >= label.hi)
    throw InvalidArgument("label " + label.to_string() + " is not a 2-subset of {1.." + std::to_string(n_lines) + "}");
  if (find(label)) throw InvalidArgument("duplicate label " + label.to_string());
  if (static_cast<int>(v.dim()) != dim)
    throw InvalidArgument("vector " + label.to_string() + " has dimension " + std::to_string(v.dim()) + ", expected " + std::to_string(dim));
  labels.push_back(label);
  vectors.push_back(std::move(v));
  grow_index();
  const auto n = static_cast<std::size_t>(n_lines) + 1;
  index_[static_cast<std::size_t>(label.lo) * n + static_cast<std::size_t>(label.hi)] = static_cast<std::int32_t>(labels.size() - 1);
}

std::optional<std::size_t> KSSet::find(Pair label) const {
  const auto n = static_cast<std::size_t>(n_lines) + 1;
  if (label.lo < 1 || label.hi > n_lines || label.lo >= label.hi) return std::nullopt;
  if (index_.size() == n * n) {
    const auto i = index_[static_cast<std::size_t>(label.lo) * n + static_cast<std::size_t>(label.hi)];
    if (i >= 0 && static_cast<std::size_t>(i) < labels.size() && labels[static_cast<std::size_t>(i)] == label) return static_cast<std::size_t>(i);
  }
  // Index missing or stale (the record was edited field by field).
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  return std::nullopt;
}

const CycVector& KSSet::at(Pair label) const {
  const auto i = find(label);
  if (!i) throw InvalidArgument("no vector labeled " + label.to_string());
  return vectors[*i];
}

void KSSet::add_star_bases() {
  for (int r = 1; r <= n_lines; ++r) {
    KSBasis b{r, {}};
    for (int j = 1; j <= n_lines; ++j)
      if (j != r)
        if (const auto i = find(Pair::of(r, j))) b.members.push_back(*i);
    if (!b.members.empty()) bases.push_back(std::move(b));
  }
}

std::vector<int> KSSet::basis_incidence() const {
  std::vector<int> count(vectors.size(), 0);
  for (const auto& b : bases)
    for (auto m : b.members) ++count.at(m);
  return count;
}

KSSet lisonek_construct(const SHadamard& input) {
  const int n = input.order;
  if (n < 2 || n % 2 != 0)
    throw InvalidArgument("lisonek_construct needs an even order, got " + std::to_string(n));
  if (input.root_order < 3) throw InvalidArgument("lisonek_construct needs root order >= 3");
  const bool was_normalized = std::all_of(input.exponents.front().begin(), input.exponents.front().end(), [](int e) { return e == 0; });
  const SHadamard s = was_normalized ? input : normalize_shadamard(input);
  const int g = s.root_order;

  // rows[t] = h_t (1-based as in the construction).
  auto h = [&](int t) -> const std::vector<int>& { return s.exponents[static_cast<std::size_t>(t - 1)]; };
  KSSet k;
  k.n_lines = n + 1;
  k.dim = n;
  k.root_order = g;
  if (!was_normalized) k.notes.push_back("input S-Hadamard matrix was normalized by its first row");
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int r = 1; r <= n + 1; ++r) {
    for (int t = r + 1; t <= n + 1; ++t) {
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (r == 1) e[j] = h(t - 1)[j];
        else if (r == 2) e[j] = static_cast<int>(mod(2 * h(t - 1)[j], g));
        else e[j] = static_cast<int>(mod(h(r - 1)[j] + h(t - 1)[j], g));
      }
      k.add({r, t}, CycVector::from_exponents(g, e));
    }
  }
  k.add_star_bases();
  return k;
}

VerificationReport verify_bases(const KSSet& k) {
  VerificationReport report;
  report.subject = "bases of KS set on J(" + std::to_string(k.n_lines) + ",2) in dimension " + std::to_string(k.dim);
  std::vector<VerificationReport> per_basis(k.bases.size());
  parallel_for(k.bases.size(), [&](std::size_t bi) {
    auto& local = per_basis[bi];
    const auto& b = k.bases[bi];
    const long long line = b.line;
    ++local.checks;
    if (static_cast<int>(b.members.size()) != k.dim)
      local.fail("basis-size", {line, static_cast<long long>(b.members.size())},
                 "basis " + std::to_string(line) + " has " + std::to_string(b.members.size()) + " vectors, expected " + std::to_string(k.dim));
    std::vector<CycVector> vs;
    for (auto m : b.members) {
      if (m >= k.vectors.size()) {
        local.fail("basis-member", {line, static_cast<long long>(m)}, "basis refers to a missing vector");
        return;
      }
      vs.push_back(k.vectors[m]);
      ++local.checks;
      if (k.vectors[m].is_zero()) local.fail("zero-vector", {line, static_cast<long long>(m)}, "vector " + k.labels[m].to_string() + " is zero");
    }
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        ++local.checks;
        if (!orthogonal(vs[i], vs[j]))
          local.fail("orthogonality", {line, k.labels[b.members[i]].lo, k.labels[b.members[i]].hi, k.labels[b.members[j]].lo, k.labels[b.members[j]].hi},
                     "basis " + std::to_string(line) + ": " + k.labels[b.members[i]].to_string() + " and " +
                         k.labels[b.members[j]].to_string() + " are not orthogonal");
      }
    ++local.checks;
    const auto r = rank(vs);
    if (static_cast<int>(r) != k.dim)
      local.fail("rank", {line, static_cast<long long>(r)}, "basis " + std::to_string(line) + " has rank " + std::to_string(r) + ", expected " + std::to_string(k.dim));
  });
  for (const auto& local : per_basis) report.merge(local);
  return report;
}

bool parity_check(const KSSet& k) {
  if (k.bases.size() % 2 == 0) return false;
  for (int c : k.basis_incidence())
    if (c % 2 != 0) return false;
  return true;
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none: return "none";
    case SearchStatus::indeterminate: return "indeterminate";
  }
  return "?";
}

std::vector<std::vector<char>> orthogonality_matrix(const KSSet& k) {
  const std::size_t n = k.vectors.size();
  std::vector<std::vector<char>> o(n, std::vector<char>(n, 0));
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j) o[i][j] = orthogonal(k.vectors[i], k.vectors[j]) ? 1 : 0;
  });
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) o[j][i] = o[i][j];
  return o;
}

namespace {

class AssignmentSearch {
 public:
  AssignmentSearch(const KSSet& k, std::vector<std::vector<std::size_t>> conflicts, std::optional<double> budget)
      : k_(k), conflicts_(std::move(conflicts)), state_(k.vectors.size(), unknown) {
    if (budget) deadline_ = std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(*budget));
  }

  SearchResult run() {
    SearchResult out;
    const bool found = descend();
    out.nodes = nodes_;
    if (timed_out_) out.status = SearchStatus::indeterminate;
    else if (found) {
      out.status = SearchStatus::found;
      for (std::size_t i = 0; i < state_.size(); ++i)
        if (state_[i] == one) out.ones.push_back(i);
    } else
      out.status = SearchStatus::none;
    return out;
  }

 private:
  static constexpr signed char unknown = -1, zero = 0, one = 1;

  bool out_of_time() {
    if (!deadline_ || (nodes_ & 1023) != 0) return timed_out_;
    if (std::chrono::steady_clock::now() > *deadline_) timed_out_ = true;
    return timed_out_;
  }

  // Every basis needs a 1 or at least one undecided member.
  bool bases_alive() const {
    for (const auto& b : k_.bases) {
      bool alive = false;
      for (auto m : b.members)
        if (state_[m] != zero) { alive = true; break; }
      if (!alive) return false;
    }
    return true;
  }

  bool descend() {
    ++nodes_;
    if (out_of_time()) return false;
    std::size_t next = k_.bases.size();
    for (std::size_t b = 0; b < k_.bases.size() && next == k_.bases.size(); ++b) {
      bool has_one = false;
      for (auto m : k_.bases[b].members) has_one = has_one || state_[m] == one;
      if (!has_one) next = b;
    }
    if (next == k_.bases.size()) return true;

    for (auto c : k_.bases[next].members) {
      if (state_[c] != unknown) continue;
      std::vector<std::size_t> trail{c};
      state_[c] = one;
      bool ok = true;
      for (auto w : conflicts_[c]) {
        if (state_[w] == one) { ok = false; break; }
        if (state_[w] == unknown) state_[w] = zero, trail.push_back(w);
      }
      if (ok && bases_alive() && descend()) return true;
      for (auto t : trail) state_[t] = unknown;
      if (timed_out_) return false;
    }
    return false;
  }

  const KSSet& k_;
  std::vector<std::vector<std::size_t>> conflicts_;
  std::vector<signed char> state_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

SearchResult ks_assignment_search(const KSSet& k, bool full_orthogonality, std::optional<double> budget_seconds) {
  const std::size_t n = k.vectors.size();
  std::vector<std::vector<char>> clash(n, std::vector<char>(n, 0));
  for (const auto& b : k.bases)
    for (auto i : b.members)
      for (auto j : b.members)
        if (i != j) clash[i][j] = 1;
  if (full_orthogonality) {
    const auto o = orthogonality_matrix(k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) clash[i][j] |= o[i][j];
  }
  std::vector<std::vector<std::size_t>> conflicts(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (clash[i][j]) conflicts[i].push_back(j);
  return AssignmentSearch(k, std::move(conflicts), budget_seconds).run();
}

SimpleGraph orthogonality_graph(const KSSet& k) {
  const auto o = orthogonality_matrix(k);
  std::vector<Pair> edges;
  for (std::size_t i = 0; i < o.size(); ++i)
    for (std::size_t j = i + 1; j < o.size(); ++j)
      if (o[i][j]) edges.push_back({static_cast<int>(i) + 1, static_cast<int>(j) + 1});
  return SimpleGraph(static_cast<int>(o.size()), std::move(edges), k.labels);
}

std::vector<std::pair<Pair, Pair>> faithfulness_check(const KSSet& k) {
  const std::size_t n = k.vectors.size();
  std::vector<std::vector<std::pair<Pair, Pair>>> per_row(n);
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j)
      if (intersection_size(k.labels[i], k.labels[j]) == 0 && orthogonal(k.vectors[i], k.vectors[j])) {
        auto a = k.labels[i], b = k.labels[j];
        if (b < a) std::swap(a, b);
        per_row[i].emplace_back(a, b);
      }
  });
  std::vector<std::pair<Pair, Pair>> out;
  for (auto& row : per_row) out.insert(out.end(), row.begin(), row.end());
  std::sort(out.begin(), out.end());
  return out;
}

VerificationReport or_check(const KSSet& k) {
  VerificationReport report;
  report.subject = "orthogonal representation of the line graph on " + std::to_string(k.labels.size()) + " labels";
  std::vector<std::vector<std::size_t>> star(static_cast<std::size_t>(k.n_lines) + 1);
  for (std::size_t i = 0; i < k.labels.size(); ++i) {
    star[static_cast<std::size_t>(k.labels[i].lo)].push_back(i);
    star[static_cast<std::size_t>(k.labels[i].hi)].push_back(i);
  }
  std::vector<VerificationReport> per_point(star.size());
  parallel_for(star.size(), [&](std::size_t p) {
    auto& local = per_point[p];
    const auto& s = star[p];
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b) {
        ++local.checks;
        if (!orthogonal(k.vectors[s[a]], k.vectors[s[b]])) {
          const auto la = k.labels[s[a]], lb = k.labels[s[b]];
          local.fail("adjacent-not-orthogonal", {la.lo, la.hi, lb.lo, lb.hi}, la.to_string() + " and " + lb.to_string() + " share a point but are not orthogonal");
        }
      }
  });
  for (const auto& local : per_point) report.merge(local);
  return report;
}

}  // namespace starks
