#pragma once

// Reference implementations used to cross-check the library. Each one takes
// the slow, obvious route and shares no algorithmic code with what it checks.

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "starks/bell.hpp"
#include "starks/cyclotomic.hpp"
#include "starks/games.hpp"
#include "starks/graph.hpp"
#include "starks/hadamard.hpp"
#include "starks/ksets.hpp"

namespace oracle {

using cplx = std::complex<double>;

cplx eval(const starks::CycInt& x);
std::vector<cplx> eval(const starks::CycVector& v);
cplx inner(const std::vector<cplx>& u, const std::vector<cplx>& v);

/// Numerical rank with partial pivoting.
std::size_t float_rank(std::vector<std::vector<cplx>> rows, double tol = 1e-8);
/// Rank over Q by textbook elimination on mpq entries.
std::size_t mpq_rank(const std::vector<std::vector<long long>>& rows);
/// Affine rank of 0/1 points through mpq_rank of the differences.
std::size_t mpq_affine_rank(const std::vector<std::vector<std::int8_t>>& points);

/// Recounts every row difference.
bool gh_by_counting(const starks::GHMatrix& m);
/// H H* = nI and orthogonal squared rows, in floating point.
bool shadamard_numeric(const starks::SHadamard& s, double tol = 1e-9);

/// Tries every subset of vectors: one 1 per basis, no two 1s inside a basis.
/// Feasible up to about 24 vectors.
std::optional<std::vector<std::size_t>> ks_subsets(const starks::KSSet& k);

/// Joint enumeration over both players' deterministic strategies.
long long joint_optimum(const starks::StarGame& g);

/// Werner-state winning probability from the actual vectors: p = V p_psi +
/// (1 - V) tr(P_a) tr(Q_b) / d^2, averaged over allowed inputs.
double werner_value(const starks::StarGame& g, const starks::KSSet& k, double v);

/// Strong regularity from A^2 = kI + lambda A + mu (J - I - A).
std::optional<starks::SrgParameters> srg_by_matrix(const starks::SimpleGraph& g);

/// Functional value summed term by term.
long long functional_value(const starks::BellFunctional& f, const std::vector<int>& alice_pos, const std::vector<int>& bob_pos);

}  // namespace oracle
