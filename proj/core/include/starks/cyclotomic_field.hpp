#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "starks/cyclotomic.hpp"
#include "starks/numbers.hpp"

namespace starks {

/// Element of the field Q(zeta_n) in canonical form: phi(n) rational
/// coefficients of 1, zeta, ..., zeta^(phi(n)-1) modulo Phi_n. An empty
/// coefficient list is zero.
class CycRational {
 public:
  CycRational() : CycRational(1) {}
  explicit CycRational(int order) : order_(order) {}
  CycRational(int order, const Rational& value);
  explicit CycRational(const CycInt& value);

  int order() const { return order_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  std::optional<Rational> as_rational() const;
  std::complex<double> evaluate() const;
  std::string to_string() const;

  CycRational conj() const;
  CycRational inverse() const;
  /// The same element in Q(zeta_m); m must be a multiple of order().
  CycRational promoted_to(int m) const;

  CycRational operator-() const;
  CycRational& operator+=(const CycRational& other);
  CycRational& operator-=(const CycRational& other);
  CycRational& operator*=(const CycRational& other);
  CycRational& operator/=(const CycRational& other) { return *this *= other.inverse(); }

  friend CycRational operator+(CycRational a, const CycRational& b) { return a += b; }
  friend CycRational operator-(CycRational a, const CycRational& b) { return a -= b; }
  friend CycRational operator*(CycRational a, const CycRational& b) { return a *= b; }
  friend CycRational operator/(CycRational a, const CycRational& b) { return a /= b; }
  friend bool operator==(const CycRational& a, const CycRational& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();
  void require_same_order(const CycRational& other) const;

  int order_;
  std::vector<Rational> coeffs_;
};

/// Exact rank over Q(zeta_L) of a family of vectors, where L is the lcm of
/// their orders. Gaussian elimination with canonical field elements.
std::size_t rank(std::span<const CycVector> vectors);

}  // namespace starks
