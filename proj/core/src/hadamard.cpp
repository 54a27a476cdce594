#include "starks/hadamard.hpp"

#include <sstream>
#include <string>

#include "starks/parallel.hpp"

namespace starks {

namespace {

void require_odd_prime(int q, const char* what) {
  if (q == 2) throw InvalidArgument(std::string(what) + ": q = 2 is not supported");
  if (!is_prime(q)) throw InvalidArgument(std::string(what) + ": " + std::to_string(q) + " is not prime");
}

// Sum over j of zeta_g^(scale * (e_k[j] - e_l[j])).
CycInt row_sum(const std::vector<int>& ek, const std::vector<int>& el, int g, int scale) {
  CycInt sum(g);
  std::vector<long> counts(static_cast<std::size_t>(g), 0);
  for (std::size_t j = 0; j < ek.size(); ++j) ++counts[static_cast<std::size_t>(mod(scale * (ek[j] - el[j]), g))];
  for (int r = 0; r < g; ++r)
    if (counts[static_cast<std::size_t>(r)] != 0) sum.add_to_coeff(r, BigInt(counts[static_cast<std::size_t>(r)]));
  return sum;
}

}  // namespace

CycVector SHadamard::row(std::size_t i) const { return CycVector::from_exponents(root_order, exponents.at(i)); }

bool is_quadratic_residue(long long a, int q) {
  a = mod(a, q);
  if (a == 0) return true;
  for (long long x = 1; x < q; ++x)
    if (x * x % q == a) return true;
  return false;
}

int smallest_nonresidue(int q) {
  require_odd_prime(q, "smallest_nonresidue");
  for (int c = 2; c < q; ++c)
    if (!is_quadratic_residue(c, q)) return c;
  throw std::logic_error("no non-residue found");
}

GHMatrix jungnickel_gh(int q, std::optional<int> c_opt) {
  require_odd_prime(q, "jungnickel_gh");
  const int c = c_opt ? static_cast<int>(mod(*c_opt, q)) : smallest_nonresidue(q);
  if (is_quadratic_residue(c, q))
    throw InvalidArgument("jungnickel_gh: " + std::to_string(c) + " is a square modulo " + std::to_string(q));

  const long long inv4 = mod_inverse(4, q);
  const long long inv_c = mod_inverse(c, q);
  GHMatrix d;
  d.group_order = q;
  d.lambda = 2;
  d.rows.assign(2 * static_cast<std::size_t>(q), std::vector<int>(2 * static_cast<std::size_t>(q), 0));
  for (long long x = 0; x < q; ++x) {
    for (long long y = 0; y < q; ++y) {
      const long long xy = x * y;
      const long long x2_4 = x * x % q * inv4;
      const long long a1 = xy + x2_4;
      const long long a2 = xy + c * x2_4;
      const long long a3 = xy - y * y - x2_4;
      const long long a4 = mod(a3, q) * inv_c;
      const auto X = static_cast<std::size_t>(x), Y = static_cast<std::size_t>(y), Q = static_cast<std::size_t>(q);
      d.rows[X][Y] = static_cast<int>(mod(a1, q));
      d.rows[X][Q + Y] = static_cast<int>(mod(a2, q));
      d.rows[Q + X][Y] = static_cast<int>(mod(a3, q));
      d.rows[Q + X][Q + Y] = static_cast<int>(mod(a4, q));
    }
  }
  return d;
}

GHMatrix gh_mult_table(int p) {
  require_odd_prime(p, "gh_mult_table");
  GHMatrix m;
  m.group_order = p;
  m.lambda = 1;
  m.rows.assign(static_cast<std::size_t>(p), std::vector<int>(static_cast<std::size_t>(p)));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) m.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i * j % p;
  return m;
}

GHMatrix gh_kronecker(const GHMatrix& a, const GHMatrix& b) {
  if (a.group_order != b.group_order)
    throw InvalidArgument("gh_kronecker: group orders " + std::to_string(a.group_order) + " and " +
                          std::to_string(b.group_order) + " differ");
  const int g = a.group_order;
  const std::size_t na = a.size(), nb = b.size();
  GHMatrix k;
  k.group_order = g;
  k.rows.assign(na * nb, std::vector<int>(na * nb));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t r = 0; r < nb; ++r)
        for (std::size_t s = 0; s < nb; ++s)
          k.rows[i * nb + r][j * nb + s] = static_cast<int>(mod(a.rows[i][j] + b.rows[r][s], g));
  k.lambda = static_cast<int>(k.size()) / g;
  return k;
}

VerificationReport verify_gh(const GHMatrix& m) {
  VerificationReport report;
  report.subject = "GH(" + std::to_string(m.group_order) + "," + std::to_string(m.lambda) + ")";
  const int g = m.group_order;
  const std::size_t n = m.size();
  if (g < 2) {
    report.fail("group-order", {g}, "group order must be at least 2");
    return report;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (m.rows[i].size() != n) report.fail("shape", {static_cast<long long>(i)}, "row length differs from row count");
  if (n % static_cast<std::size_t>(g) != 0) report.fail("shape", {static_cast<long long>(n)}, "side is not a multiple of g");
  if (!report.passed()) return report;

  const long long lambda = static_cast<long long>(n) / g;
  if (m.lambda != lambda)
    report.fail("lambda", {m.lambda, lambda}, "stored lambda does not match side / g");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m.rows[i][j] < 0 || m.rows[i][j] >= g)
        report.fail("entry-range", {static_cast<long long>(i), static_cast<long long>(j)}, "entry is not a residue");

  std::vector<VerificationReport> per_row(n);
  parallel_for(n, [&](std::size_t r) {
    auto& local = per_row[r];
    std::vector<long long> counts(static_cast<std::size_t>(g));
    for (std::size_t s = r + 1; s < n; ++s) {
      std::fill(counts.begin(), counts.end(), 0);
      for (std::size_t j = 0; j < n; ++j) ++counts[static_cast<std::size_t>(mod(m.rows[r][j] - m.rows[s][j], g))];
      ++local.checks;
      for (int e = 0; e < g; ++e) {
        if (counts[static_cast<std::size_t>(e)] == lambda) continue;
        std::ostringstream msg;
        msg << "rows " << r << "," << s << ": residue " << e << " occurs " << counts[static_cast<std::size_t>(e)]
            << " times, expected " << lambda;
        local.fail("row-pair", {static_cast<long long>(r), static_cast<long long>(s)}, msg.str());
        break;
      }
    }
  });
  for (const auto& local : per_row) report.merge(local);
  return report;
}

SHadamard gh_to_shadamard(const GHMatrix& m) {
  if (m.group_order < 3)
    throw InvalidArgument("gh_to_shadamard: needs group order >= 3, got " + std::to_string(m.group_order));
  if (!verify_gh(m).passed()) throw InvalidArgument("gh_to_shadamard: input is not a generalized Hadamard matrix");
  SHadamard s;
  s.order = static_cast<int>(m.size());
  s.root_order = m.group_order;
  s.exponents = m.rows;
  s.normalized = true;
  for (int e : m.rows.front())
    if (e != 0) s.normalized = false;
  return s;
}

VerificationReport verify_shadamard(const SHadamard& s) {
  VerificationReport report;
  report.subject = "S-Hadamard(" + std::to_string(s.order) + ", zeta_" + std::to_string(s.root_order) + ")";
  const std::size_t n = s.exponents.size();
  if (s.root_order < 1) {
    report.fail("root-order", {s.root_order}, "root order must be positive");
    return report;
  }
  if (static_cast<int>(n) != s.order) report.fail("shape", {s.order, static_cast<long long>(n)}, "order differs from row count");
  for (std::size_t i = 0; i < n; ++i)
    if (s.exponents[i].size() != n) report.fail("shape", {static_cast<long long>(i)}, "matrix is not square");
  if (!report.passed()) return report;
  report.notes.push_back("unit modulus holds structurally: entries are stored as root-of-unity exponents");

  const int g = s.root_order;
  const BigInt expected_norm(static_cast<long>(n));
  std::vector<VerificationReport> per_row(n);
  parallel_for(n, [&](std::size_t k) {
    auto& local = per_row[k];
    // (H H*)_{kk} = n.
    const CycInt diag = row_sum(s.exponents[k], s.exponents[k], g, 1);
    ++local.checks;
    if (!(diag == CycInt::integer(g, expected_norm)))
      local.fail("gram", {static_cast<long long>(k), static_cast<long long>(k)}, "diagonal of H H* is not n");
    for (std::size_t l = k + 1; l < n; ++l) {
      local.checks += 2;
      if (!row_sum(s.exponents[k], s.exponents[l], g, 1).is_zero())
        local.fail("gram", {static_cast<long long>(k), static_cast<long long>(l)}, "rows are not orthogonal");
      if (!row_sum(s.exponents[k], s.exponents[l], g, 2).is_zero())
        local.fail("squared-rows", {static_cast<long long>(k), static_cast<long long>(l)},
                   "rows of the entrywise square are not orthogonal");
    }
  });
  for (const auto& local : per_row) report.merge(local);
  return report;
}

SHadamard normalize_shadamard(const SHadamard& s) {
  SHadamard out = s;
  if (s.exponents.empty()) return out;
  const auto first = s.exponents.front();
  for (auto& row : out.exponents)
    for (std::size_t j = 0; j < row.size(); ++j) row[j] = static_cast<int>(mod(row[j] - first[j], s.root_order));
  out.normalized = true;
  return out;
}

}  // namespace starks
