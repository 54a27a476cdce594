#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "starks/cyclotomic.hpp"
#include "starks/graph.hpp"
#include "starks/hadamard.hpp"
#include "starks/report.hpp"

namespace starks {

/// One orthogonal basis: the vectors v^{line, j}, stored as indices into
/// KSSet::vectors in ascending partner order.
struct KSBasis {
  int line = 0;
  std::vector<std::size_t> members;
  friend bool operator==(const KSBasis&, const KSBasis&) = default;
};

/// Vectors labeled by 2-subsets of {1..n_lines}, with their bases. The label
/// {i,j} is stored once; v^{i,j} and v^{j,i} are the same entry.
struct KSSet {
  int n_lines = 0;
  int dim = 0;
  int root_order = 1;
  std::vector<Pair> labels;
  std::vector<CycVector> vectors;
  std::vector<KSBasis> bases;
  std::vector<std::string> notes;

  /// Appends (label, vector); the label must be new.
  void add(Pair label, CycVector v);
  std::optional<std::size_t> find(Pair label) const;
  const CycVector& at(Pair label) const;
  /// Adds b_r = {v^{r,j}} for every line r that has at least one labeled point.
  void add_star_bases();
  /// Number of bases containing each vector.
  std::vector<int> basis_incidence() const;

  friend bool operator==(const KSSet& a, const KSSet& b) {
    return a.n_lines == b.n_lines && a.dim == b.dim && a.labels == b.labels && a.vectors == b.vectors &&
           a.bases == b.bases;
  }

 private:
  std::vector<std::int32_t> index_;
  void grow_index();
};

/// v^{1,s} = h_{s-1}, v^{2,s} = h_{s-1} o h_{s-1}, v^{r,s} = h_{r-1} o h_{s-1}
/// (3 <= r < s), from the normalized rows h_1..h_n of s.
KSSet lisonek_construct(const SHadamard& s);

/// Size d, nonzero vectors, exact pairwise orthogonality, and rank d per basis.
VerificationReport verify_bases(const KSSet& k);

/// Odd number of bases and every vector in an even number of them.
bool parity_check(const KSSet& k);

enum class SearchStatus { found, none, indeterminate };
std::string to_string(SearchStatus s);

struct SearchResult {
  SearchStatus status = SearchStatus::indeterminate;
  std::vector<std::size_t> ones;  // vector indices with f = 1
  std::uint64_t nodes = 0;
};

/// Backtracking for f: V -> {0,1} with exactly one 1 per basis. Two 1s may
/// not be orthogonal; with full_orthogonality every exactly-orthogonal pair
/// counts, otherwise only pairs sharing a basis. Bases are taken in order and
/// candidates in ascending partner order.
SearchResult ks_assignment_search(const KSSet& k, bool full_orthogonality,
                                  std::optional<double> budget_seconds = std::nullopt);

/// o[i][j] = 1 iff <v_i, v_j> = 0 exactly (i != j).
std::vector<std::vector<char>> orthogonality_matrix(const KSSet& k);
SimpleGraph orthogonality_graph(const KSSet& k);

/// Label pairs that are disjoint yet exactly orthogonal.
std::vector<std::pair<Pair, Pair>> faithfulness_check(const KSSet& k);

/// Checks that labels sharing a point carry orthogonal vectors (the OR property
/// against the line graph of the label host).
VerificationReport or_check(const KSSet& k);

}  // namespace starks
