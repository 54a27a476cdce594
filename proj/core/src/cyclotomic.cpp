#include "starks/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

namespace starks {

namespace {

void check_order(int n) {
  if (n < 1) throw InvalidArgument("cyclotomic order must be positive, got " + std::to_string(n));
}

// Exact quotient of a by a monic divisor b; both lowest degree first.
std::vector<BigInt> divide_exact(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<BigInt> q(a.size() - db);
  for (std::size_t i = a.size(); i-- > db;) {
    const BigInt t = a[i];
    q[i - db] = t;
    if (t == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= t * b[j];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (a[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
  return q;
}

// Remainder of the first `len` coefficients of c modulo Phi_n, in place.
void reduce_in_place(std::vector<BigInt>& c, int n) {
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = c.size(); i-- > deg;) {
    if (c[i] == 0) continue;
    const BigInt t = c[i];
    for (std::size_t j = 0; j <= deg; ++j) c[i - deg + j] -= t * phi[j];
  }
  c.resize(deg);
}

}  // namespace

int euler_phi(int n) {
  check_order(n);
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<BigInt>& cyclotomic_polynomial(int n) {
  check_order(n);
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const std::vector<BigInt>>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  std::vector<BigInt> poly(static_cast<std::size_t>(n) + 1);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) poly = divide_exact(std::move(poly), cyclotomic_polynomial(d));

  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(n, std::make_unique<const std::vector<BigInt>>(std::move(poly)));
  return *it->second;
}

// ---------------------------------------------------------------- CycInt

CycInt::CycInt() : CycInt(1) {}

CycInt::CycInt(int order) : order_(order) {
  check_order(order);
  coeffs_.resize(static_cast<std::size_t>(order));
}

CycInt CycInt::root(int order, long long k) {
  CycInt r(order);
  r.coeffs_[static_cast<std::size_t>(mod(k, order))] = 1;
  return r;
}

CycInt CycInt::integer(int order, const BigInt& value) {
  CycInt r(order);
  r.coeffs_[0] = value;
  return r;
}

void CycInt::add_to_coeff(int k, const BigInt& value) {
  coeffs_[static_cast<std::size_t>(mod(k, order_))] += value;
}

CycInt CycInt::conj() const {
  CycInt r(order_);
  for (int k = 0; k < order_; ++k)
    r.coeffs_[static_cast<std::size_t>(mod(-k, order_))] = coeffs_[static_cast<std::size_t>(k)];
  return r;
}

CycInt CycInt::promoted(int m) const {
  if (m == order_) return *this;
  if (m < 1 || m % order_ != 0)
    throw InvalidArgument("cannot promote order " + std::to_string(order_) + " to " + std::to_string(m));
  const int step = m / order_;
  CycInt r(m);
  for (int k = 0; k < order_; ++k) r.coeffs_[static_cast<std::size_t>(k * step)] = coeffs_[static_cast<std::size_t>(k)];
  return r;
}

std::vector<BigInt> CycInt::reduced() const {
  std::vector<BigInt> c = coeffs_;
  reduce_in_place(c, order_);
  return c;
}

bool CycInt::is_zero() const {
  bool all_zero = true;
  for (const auto& c : coeffs_)
    if (c != 0) {
      all_zero = false;
      break;
    }
  if (all_zero) return true;
  for (const auto& c : reduced())
    if (c != 0) return false;
  return true;
}

std::optional<BigInt> CycInt::as_integer() const {
  const auto r = reduced();
  for (std::size_t k = 1; k < r.size(); ++k)
    if (r[k] != 0) return std::nullopt;
  return r.empty() ? BigInt(0) : r[0];
}

std::complex<double> CycInt::evaluate() const {
  std::complex<double> sum = 0.0;
  for (int k = 0; k < order_; ++k) {
    const double c = coeffs_[static_cast<std::size_t>(k)].get_d();
    if (c == 0.0) continue;
    const double angle = 2.0 * std::numbers::pi * k / order_;
    sum += c * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

std::string CycInt::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k < order_; ++k) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (!first) out << (c > 0 ? " + " : " - ");
    else if (c < 0) out << "-";
    first = false;
    const BigInt a = abs(c);
    if (k == 0) {
      out << a;
      continue;
    }
    if (a != 1) out << a << "*";
    out << "z" << order_;
    if (k > 1) out << "^" << k;
  }
  if (first) out << "0";
  return out.str();
}

CycInt CycInt::operator-() const {
  CycInt r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycInt& CycInt::operator+=(const CycInt& other) {
  if (other.order_ != order_) {
    const int m = static_cast<int>(lcm_ll(order_, other.order_));
    *this = promoted(m);
    return *this += other.promoted(m);
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& other) { return *this += -other; }

CycInt& CycInt::operator*=(const CycInt& other) {
  if (other.order_ != order_) {
    const int m = static_cast<int>(lcm_ll(order_, other.order_));
    *this = promoted(m);
    return *this *= other.promoted(m);
  }
  CycInt r(order_);
  for (int i = 0; i < order_; ++i) {
    const BigInt& a = coeffs_[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    for (int j = 0; j < order_; ++j) {
      const BigInt& b = other.coeffs_[static_cast<std::size_t>(j)];
      if (b == 0) continue;
      mpz_addmul(r.coeffs_[static_cast<std::size_t>((i + j) % order_)].get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
  }
  *this = std::move(r);
  return *this;
}

bool operator==(const CycInt& a, const CycInt& b) { return (a - b).is_zero(); }

// ------------------------------------------------------------- CycVector

CycVector::CycVector(int order, std::size_t dim) : order_(order), dim_(dim) {
  check_order(order);
  coeffs_.resize(dim * static_cast<std::size_t>(order));
}

CycVector CycVector::from_exponents(int order, std::span<const int> exponents) {
  CycVector v(order, exponents.size());
  for (std::size_t k = 0; k < exponents.size(); ++k)
    v.coeffs_[k * static_cast<std::size_t>(order) + static_cast<std::size_t>(mod(exponents[k], order))] = 1;
  return v;
}

CycVector CycVector::from_integers(std::span<const long long> values, int order) {
  CycVector v(order, values.size());
  for (std::size_t k = 0; k < values.size(); ++k)
    v.coeffs_[k * static_cast<std::size_t>(order)] = BigInt(static_cast<long>(values[k]));
  return v;
}

std::span<const BigInt> CycVector::entry_coeffs(std::size_t k) const {
  return {coeffs_.data() + k * static_cast<std::size_t>(order_), static_cast<std::size_t>(order_)};
}

CycInt CycVector::entry(std::size_t k) const {
  CycInt r(order_);
  const auto c = entry_coeffs(k);
  for (int i = 0; i < order_; ++i)
    if (c[static_cast<std::size_t>(i)] != 0) r.add_to_coeff(i, c[static_cast<std::size_t>(i)]);
  return r;
}

void CycVector::set_entry(std::size_t k, const CycInt& value) {
  const CycInt p = value.promoted(order_);
  for (int i = 0; i < order_; ++i)
    coeffs_[k * static_cast<std::size_t>(order_) + static_cast<std::size_t>(i)] = p.coeff(i);
}

bool CycVector::entry_structurally_zero(std::size_t k) const {
  for (const auto& c : entry_coeffs(k))
    if (c != 0) return false;
  return true;
}

std::optional<std::vector<int>> CycVector::exponents() const {
  std::vector<int> out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    int found = -1;
    const auto c = entry_coeffs(k);
    for (int i = 0; i < order_; ++i) {
      const BigInt& x = c[static_cast<std::size_t>(i)];
      if (x == 0) continue;
      if (x != 1 || found >= 0) return std::nullopt;
      found = i;
    }
    if (found < 0) return std::nullopt;
    out[k] = found;
  }
  return out;
}

CycVector CycVector::promoted(int m) const {
  if (m == order_) return *this;
  if (m < 1 || m % order_ != 0)
    throw InvalidArgument("cannot promote order " + std::to_string(order_) + " to " + std::to_string(m));
  const std::size_t step = static_cast<std::size_t>(m / order_);
  CycVector r(m, dim_);
  for (std::size_t k = 0; k < dim_; ++k)
    for (std::size_t i = 0; i < static_cast<std::size_t>(order_); ++i)
      r.coeffs_[k * static_cast<std::size_t>(m) + i * step] = coeffs_[k * static_cast<std::size_t>(order_) + i];
  return r;
}

CycVector CycVector::conj() const {
  CycVector r(order_, dim_);
  const std::size_t n = static_cast<std::size_t>(order_);
  for (std::size_t k = 0; k < dim_; ++k)
    for (std::size_t i = 0; i < n; ++i) r.coeffs_[k * n + (n - i) % n] = coeffs_[k * n + i];
  return r;
}

bool CycVector::is_zero() const {
  for (std::size_t k = 0; k < dim_; ++k)
    if (!entry_structurally_zero(k) && !entry(k).is_zero()) return false;
  return true;
}

std::vector<std::complex<double>> CycVector::evaluate() const {
  std::vector<std::complex<double>> out;
  out.reserve(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out.push_back(entry(k).evaluate());
  return out;
}

bool operator==(const CycVector& a, const CycVector& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t k = 0; k < a.dim(); ++k)
    if (!(a.entry(k) == b.entry(k))) return false;
  return true;
}

CycInt inner_product(const CycVector& u, const CycVector& v) {
  if (u.dim() != v.dim())
    throw InvalidArgument("inner product of vectors with dimensions " + std::to_string(u.dim()) + " and " +
                          std::to_string(v.dim()));
  if (u.order() != v.order()) {
    const int m = static_cast<int>(lcm_ll(u.order(), v.order()));
    return inner_product(u.promoted(m), v.promoted(m));
  }
  const int n = u.order();
  CycInt acc(n);
  std::vector<BigInt> sum(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < u.dim(); ++k) {
    const auto a = u.entry_coeffs(k);
    const auto b = v.entry_coeffs(k);
    for (int i = 0; i < n; ++i) {
      const BigInt& x = a[static_cast<std::size_t>(i)];
      if (x == 0) continue;
      for (int j = 0; j < n; ++j) {
        const BigInt& y = b[static_cast<std::size_t>(j)];
        if (y == 0) continue;
        // conj(zeta^i) * zeta^j = zeta^(j - i)
        mpz_addmul(sum[static_cast<std::size_t>(mod(j - i, n))].get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      }
    }
  }
  for (int k = 0; k < n; ++k)
    if (sum[static_cast<std::size_t>(k)] != 0) acc.add_to_coeff(k, sum[static_cast<std::size_t>(k)]);
  return acc;
}

bool orthogonal(const CycVector& u, const CycVector& v) { return inner_product(u, v).is_zero(); }

CycVector entrywise_product(const CycVector& u, const CycVector& v) {
  if (u.dim() != v.dim())
    throw InvalidArgument("entrywise product of vectors with dimensions " + std::to_string(u.dim()) + " and " +
                          std::to_string(v.dim()));
  const int m = static_cast<int>(lcm_ll(u.order(), v.order()));
  const CycVector a = u.promoted(m);
  const CycVector b = v.promoted(m);
  CycVector r(m, u.dim());
  for (std::size_t k = 0; k < u.dim(); ++k) r.set_entry(k, a.entry(k) * b.entry(k));
  return r;
}

}  // namespace starks
