#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace starks {

/// Unordered pair {lo, hi} with lo < hi; labels J(N,2) vertices and graph edges.
struct Pair {
  int lo = 0;
  int hi = 0;

  static Pair of(int a, int b);
  bool contains(int v) const { return lo == v || hi == v; }
  int other(int v) const { return v == lo ? hi : lo; }
  std::string to_string() const;
  auto operator<=>(const Pair&) const = default;
};

/// |{a.lo, a.hi} ∩ {b.lo, b.hi}|.
int intersection_size(Pair a, Pair b);

/// Simple undirected graph on vertices 1..n_vertices. Edges are kept sorted
/// and unique. Labels, when present, give a Pair per vertex.
struct SimpleGraph {
  int n_vertices = 0;
  std::vector<Pair> edges;
  std::vector<Pair> labels;

  SimpleGraph() = default;
  SimpleGraph(int n, std::vector<Pair> edge_list, std::vector<Pair> vertex_labels = {});

  bool has_edge(int u, int v) const;
  int degree(int v) const;
  std::vector<std::vector<int>> adjacency_lists() const;
  /// Indexed by vertex number; row and column 0 are unused.
  std::vector<std::vector<char>> adjacency_matrix() const;
};

SimpleGraph complete_graph(int n);
/// J(n,2): 2-subsets of {1..n} in lexicographic order, adjacent when they meet.
SimpleGraph johnson_graph(int n);
/// Vertices are the edges of g (in g.edges order), labeled by those edges.
SimpleGraph line_graph(const SimpleGraph& g);

int clique_number(const SimpleGraph& g);
/// A vertex map a -> b (0-based, index v-1) when the graphs are isomorphic.
std::optional<std::vector<int>> find_isomorphism(const SimpleGraph& a, const SimpleGraph& b);
inline bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) { return find_isomorphism(a, b).has_value(); }

struct SrgParameters {
  int v, k, lambda, mu;
  friend bool operator==(const SrgParameters&, const SrgParameters&) = default;
};
std::optional<SrgParameters> strong_regularity(const SimpleGraph& g);

}  // namespace starks
