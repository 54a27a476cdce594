#include "starks/graph.hpp"

#include <algorithm>
#include <numeric>

#include "starks/numbers.hpp"

namespace starks {

Pair Pair::of(int a, int b) {
  if (a == b) throw InvalidArgument("pair needs two distinct elements, got {" + std::to_string(a) + "," + std::to_string(a) + "}");
  return a < b ? Pair{a, b} : Pair{b, a};
}

std::string Pair::to_string() const { return "{" + std::to_string(lo) + "," + std::to_string(hi) + "}"; }

int intersection_size(Pair a, Pair b) {
  return static_cast<int>(a.contains(b.lo)) + static_cast<int>(a.contains(b.hi));
}

SimpleGraph::SimpleGraph(int n, std::vector<Pair> edge_list, std::vector<Pair> vertex_labels)
    : n_vertices(n), edges(std::move(edge_list)), labels(std::move(vertex_labels)) {
  for (const auto& e : edges)
    if (e.lo < 1 || e.hi > n || e.lo >= e.hi) throw InvalidArgument("edge " + e.to_string() + " is not valid on " + std::to_string(n) + " vertices");
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (!labels.empty() && static_cast<int>(labels.size()) != n) throw InvalidArgument("label count differs from vertex count");
}

bool SimpleGraph::has_edge(int u, int v) const {
  if (u == v) return false;
  return std::binary_search(edges.begin(), edges.end(), Pair::of(u, v));
}

int SimpleGraph::degree(int v) const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [v](const Pair& e) { return e.contains(v); }));
}

std::vector<std::vector<int>> SimpleGraph::adjacency_lists() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_vertices) + 1);
  for (const auto& e : edges) {
    adj[static_cast<std::size_t>(e.lo)].push_back(e.hi);
    adj[static_cast<std::size_t>(e.hi)].push_back(e.lo);
  }
  return adj;
}

std::vector<std::vector<char>> SimpleGraph::adjacency_matrix() const {
  const auto n = static_cast<std::size_t>(n_vertices);
  std::vector<std::vector<char>> m(n + 1, std::vector<char>(n + 1, 0));
  for (const auto& e : edges) m[static_cast<std::size_t>(e.lo)][static_cast<std::size_t>(e.hi)] = m[static_cast<std::size_t>(e.hi)][static_cast<std::size_t>(e.lo)] = 1;
  return m;
}

SimpleGraph complete_graph(int n) {
  if (n < 1) throw InvalidArgument("complete graph needs at least one vertex");
  std::vector<Pair> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.push_back({i, j});
  return SimpleGraph(n, std::move(e));
}

SimpleGraph johnson_graph(int n) {
  if (n < 4) throw InvalidArgument("johnson_graph needs n >= 4, got " + std::to_string(n));
  return line_graph(complete_graph(n));
}

SimpleGraph line_graph(const SimpleGraph& g) {
  const int m = static_cast<int>(g.edges.size());
  std::vector<Pair> e;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (intersection_size(g.edges[static_cast<std::size_t>(i)], g.edges[static_cast<std::size_t>(j)]) > 0) e.push_back({i + 1, j + 1});
  return SimpleGraph(m, std::move(e), g.edges);
}

namespace {

void bron_kerbosch(const std::vector<std::vector<char>>& adj, std::vector<int>& r, std::vector<int> p, std::vector<int> x, int& best) {
  if (p.empty() && x.empty()) {
    best = std::max(best, static_cast<int>(r.size()));
    return;
  }
  if (static_cast<int>(r.size() + p.size()) <= best) return;
  int pivot = p.empty() ? x.front() : p.front();
  std::size_t pivot_hits = 0;
  for (int u : p) {
    std::size_t hits = 0;
    for (int w : p) hits += static_cast<std::size_t>(adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)]);
    if (hits > pivot_hits) pivot_hits = hits, pivot = u;
  }
  const std::vector<int> candidates = p;
  for (int v : candidates) {
    if (adj[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(v)]) continue;
    std::vector<int> np, nx;
    for (int w : p)
      if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) np.push_back(w);
    for (int w : x)
      if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) nx.push_back(w);
    r.push_back(v);
    bron_kerbosch(adj, r, std::move(np), std::move(nx), best);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

int clique_number(const SimpleGraph& g) {
  if (g.n_vertices == 0) return 0;
  const auto adj = g.adjacency_matrix();
  std::vector<int> r, p(static_cast<std::size_t>(g.n_vertices));
  std::iota(p.begin(), p.end(), 1);
  int best = 0;
  bron_kerbosch(adj, r, std::move(p), {}, best);
  return best;
}

std::optional<std::vector<int>> find_isomorphism(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.n_vertices != b.n_vertices || a.edges.size() != b.edges.size()) return std::nullopt;
  const int n = a.n_vertices;
  const auto adj_a = a.adjacency_matrix(), adj_b = b.adjacency_matrix();
  std::vector<int> deg_a(static_cast<std::size_t>(n) + 1), deg_b(static_cast<std::size_t>(n) + 1);
  for (int v = 1; v <= n; ++v) deg_a[static_cast<std::size_t>(v)] = a.degree(v), deg_b[static_cast<std::size_t>(v)] = b.degree(v);
  {
    auto sa = deg_a, sb = deg_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  // Visit a's vertices in BFS order so each new vertex has mapped neighbours.
  std::vector<int> order;
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  const auto lists = a.adjacency_lists();
  for (int s = 1; s <= n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    seen[static_cast<std::size_t>(s)] = 1;
    order.push_back(s);
    for (std::size_t head = order.size() - 1; head < order.size(); ++head)
      for (int w : lists[static_cast<std::size_t>(order[head])])
        if (!seen[static_cast<std::size_t>(w)]) seen[static_cast<std::size_t>(w)] = 1, order.push_back(w);
  }

  std::vector<int> map(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  auto extend = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    const int u = order[depth];
    for (int c = 1; c <= n; ++c) {
      if (used[static_cast<std::size_t>(c)] || deg_b[static_cast<std::size_t>(c)] != deg_a[static_cast<std::size_t>(u)]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const int w = order[k];
        ok = adj_a[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] == adj_b[static_cast<std::size_t>(c)][static_cast<std::size_t>(map[static_cast<std::size_t>(w)])];
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(u)] = c;
      used[static_cast<std::size_t>(c)] = 1;
      if (self(self, depth + 1)) return true;
      used[static_cast<std::size_t>(c)] = 0;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) out[static_cast<std::size_t>(v - 1)] = map[static_cast<std::size_t>(v)] - 1;
  return out;
}

std::optional<SrgParameters> strong_regularity(const SimpleGraph& g) {
  const int n = g.n_vertices;
  if (n < 2) return std::nullopt;
  const auto adj = g.adjacency_matrix();
  const int k = g.degree(1);
  int lambda = -1, mu = -1;
  for (int u = 1; u <= n; ++u) {
    if (g.degree(u) != k) return std::nullopt;
    for (int v = u + 1; v <= n; ++v) {
      int common = 0;
      for (int w = 1; w <= n; ++w) common += adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] & adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
      int& slot = adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] ? lambda : mu;
      if (slot == -1) slot = common;
      else if (slot != common) return std::nullopt;
    }
  }
  return SrgParameters{n, k, std::max(lambda, 0), std::max(mu, 0)};
}

}  // namespace starks
