#include "starks/cyclotomic_field.hpp"

#include <sstream>
#include <utility>

namespace starks {

namespace {

// Reduces a rational polynomial modulo Phi_n and trims to phi(n) terms.
void reduce(std::vector<Rational>& c, int n) {
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = c.size(); i-- > deg;) {
    if (c[i] == 0) continue;
    const Rational t = c[i];
    for (std::size_t j = 0; j <= deg; ++j)
      if (phi[j] != 0) c[i - deg + j] -= t * phi[j];
  }
  if (c.size() > deg) c.resize(deg);
}

// Solves a square rational system; the matrix must be invertible.
std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::domain_error("division by zero in Q(zeta)");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const Rational inv = 1 / a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

}  // namespace

CycRational::CycRational(int order, const Rational& value) : order_(order) {
  coeffs_.assign(static_cast<std::size_t>(euler_phi(order)), Rational(0));
  coeffs_[0] = value;
  normalize();
}

CycRational::CycRational(const CycInt& value) : order_(value.order()) {
  const auto r = value.reduced();
  coeffs_.assign(r.begin(), r.end());
  normalize();
}

void CycRational::normalize() {
  for (auto& c : coeffs_) c.canonicalize();
  bool zero = true;
  for (const auto& c : coeffs_)
    if (c != 0) {
      zero = false;
      break;
    }
  if (zero) coeffs_.clear();
  else coeffs_.resize(static_cast<std::size_t>(euler_phi(order_)), Rational(0));
}

void CycRational::require_same_order(const CycRational& other) const {
  if (order_ != other.order_)
    throw InvalidArgument("mixed orders " + std::to_string(order_) + " and " + std::to_string(other.order_) +
                          " in Q(zeta) arithmetic");
}

std::optional<Rational> CycRational::as_rational() const {
  if (coeffs_.empty()) return Rational(0);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return std::nullopt;
  return coeffs_[0];
}

std::complex<double> CycRational::evaluate() const {
  std::complex<double> sum = 0.0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    sum += coeffs_[k].get_d() * CycInt::root(order_, static_cast<long long>(k)).evaluate();
  }
  return sum;
}

std::string CycRational::to_string() const {
  if (auto q = as_rational()) return starks::to_string(*q);
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << starks::to_string(coeffs_[k]) << ")";
    if (k > 0) out << "*z" << order_ << "^" << k;
  }
  return out.str();
}

CycRational CycRational::conj() const {
  if (is_zero()) return *this;
  // conj(zeta^k) = zeta^(n-k); build in the x^n - 1 representation and reduce.
  std::vector<Rational> c(static_cast<std::size_t>(order_), Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    c[(static_cast<std::size_t>(order_) - k) % static_cast<std::size_t>(order_)] += coeffs_[k];
  reduce(c, order_);
  CycRational r(order_);
  r.coeffs_ = std::move(c);
  r.normalize();
  return r;
}

CycRational CycRational::promoted_to(int m) const {
  if (m == order_) return *this;
  if (m <= 0 || m % order_ != 0)
    throw InvalidArgument("cannot promote Q(zeta_" + std::to_string(order_) + ") to Q(zeta_" + std::to_string(m) + ")");
  CycRational r(m);
  if (is_zero()) return r;
  const std::size_t step = static_cast<std::size_t>(m / order_);
  std::vector<Rational> c(static_cast<std::size_t>(m), Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k * step] = coeffs_[k];
  reduce(c, m);
  r.coeffs_ = std::move(c);
  r.normalize();
  return r;
}

CycRational CycRational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(zeta)");
  const std::size_t deg = static_cast<std::size_t>(euler_phi(order_));
  // Column j holds this * zeta^j; solve for the element mapping to 1.
  std::vector<std::vector<Rational>> m(deg, std::vector<Rational>(deg, Rational(0)));
  for (std::size_t j = 0; j < deg; ++j) {
    std::vector<Rational> c(deg + j, Rational(0));
    for (std::size_t k = 0; k < deg; ++k) c[k + j] = coeffs_[k];
    reduce(c, order_);
    c.resize(deg, Rational(0));
    for (std::size_t i = 0; i < deg; ++i) m[i][j] = c[i];
  }
  std::vector<Rational> e(deg, Rational(0));
  e[0] = 1;
  CycRational r(order_);
  r.coeffs_ = solve(std::move(m), std::move(e));
  r.normalize();
  return r;
}

CycRational CycRational::operator-() const {
  CycRational r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycRational& CycRational::operator+=(const CycRational& other) {
  require_same_order(other);
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  normalize();
  return *this;
}

CycRational& CycRational::operator-=(const CycRational& other) { return *this += -other; }

CycRational& CycRational::operator*=(const CycRational& other) {
  require_same_order(other);
  if (is_zero()) return *this;
  if (other.is_zero()) return *this = other;
  std::vector<Rational> c(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      if (other.coeffs_[j] != 0) c[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  reduce(c, order_);
  coeffs_ = std::move(c);
  normalize();
  return *this;
}

std::size_t rank(std::span<const CycVector> vectors) {
  if (vectors.empty()) return 0;
  long long order = 1;
  const std::size_t dim = vectors.front().dim();
  for (const auto& v : vectors) {
    if (v.dim() != dim) throw InvalidArgument("rank of vectors with unequal dimensions");
    order = lcm_ll(order, v.order());
  }
  const int n = static_cast<int>(order);

  std::vector<std::vector<CycRational>> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    const CycVector p = v.promoted(n);
    std::vector<CycRational> row(dim, CycRational(n));
    for (std::size_t k = 0; k < dim; ++k)
      if (!p.entry_structurally_zero(k)) row[k] = CycRational(p.entry(k));
    rows.push_back(std::move(row));
  }

  std::size_t r = 0;
  for (std::size_t col = 0; col < dim && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    const CycRational inv = rows[r][col].inverse();
    std::vector<std::size_t> support;
    for (std::size_t j = col + 1; j < dim; ++j)
      if (!rows[r][j].is_zero()) support.push_back(j);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][col].is_zero()) continue;
      const CycRational f = rows[i][col] * inv;
      for (std::size_t j : support) rows[i][j] -= f * rows[r][j];
      rows[i][col] = CycRational(n);
    }
    ++r;
  }
  return r;
}

}  // namespace starks
