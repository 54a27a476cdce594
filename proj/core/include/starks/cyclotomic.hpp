#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "starks/numbers.hpp"

namespace starks {

int euler_phi(int n);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree
/// first. Computed once per n by exact division of x^n - 1 by Phi_d for the
/// proper divisors d of n, then cached for the life of the process.
const std::vector<BigInt>& cyclotomic_polynomial(int n);

/// Element of Z[zeta_n], stored as n integer coefficients of 1, zeta, ...,
/// zeta^(n-1). The representation is taken modulo x^n - 1, so it is not
/// canonical; equality and the zero test reduce modulo Phi_n.
class CycInt {
 public:
  CycInt();
  explicit CycInt(int order);

  static CycInt root(int order, long long k);
  static CycInt integer(int order, const BigInt& value);

  int order() const { return order_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& coeff(int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  void add_to_coeff(int k, const BigInt& value);

  /// Complex conjugate: zeta^k -> zeta^(n-k).
  CycInt conj() const;
  /// The same element viewed in Z[zeta_m]; m must be a multiple of order().
  CycInt promoted(int m) const;
  bool is_zero() const;
  /// Canonical remainder modulo Phi_n, phi(n) coefficients.
  std::vector<BigInt> reduced() const;
  /// Value at zeta_n = exp(2 pi i / n). Diagnostics only.
  std::complex<double> evaluate() const;
  /// Some(value) when the element is a rational integer after reduction.
  std::optional<BigInt> as_integer() const;
  std::string to_string() const;

  CycInt operator-() const;
  CycInt& operator+=(const CycInt& other);
  CycInt& operator-=(const CycInt& other);
  CycInt& operator*=(const CycInt& other);

  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }
  friend bool operator==(const CycInt& a, const CycInt& b);

 private:
  int order_;
  std::vector<BigInt> coeffs_;
};

/// A vector of d elements of Z[zeta_n] sharing one order, stored flat as
/// d * n coefficients.
class CycVector {
 public:
  CycVector() = default;
  CycVector(int order, std::size_t dim);

  /// Entry k is zeta_order^exponents[k].
  static CycVector from_exponents(int order, std::span<const int> exponents);
  /// Rational-integer entries; order defaults to 1.
  static CycVector from_integers(std::span<const long long> values, int order = 1);

  int order() const { return order_; }
  std::size_t dim() const { return dim_; }

  CycInt entry(std::size_t k) const;
  void set_entry(std::size_t k, const CycInt& value);
  std::span<const BigInt> entry_coeffs(std::size_t k) const;
  /// True when all stored coefficients of entry k vanish.
  bool entry_structurally_zero(std::size_t k) const;

  /// Exponent string when every entry is a single root of unity.
  std::optional<std::vector<int>> exponents() const;

  CycVector promoted(int m) const;
  CycVector conj() const;
  bool is_zero() const;
  std::vector<std::complex<double>> evaluate() const;

  friend bool operator==(const CycVector& a, const CycVector& b);

 private:
  int order_ = 1;
  std::size_t dim_ = 0;
  std::vector<BigInt> coeffs_;
};

/// Hermitian inner product, conjugate-linear in the first argument:
/// <u, v> = sum_k conj(u_k) v_k. Orders are promoted to their lcm.
CycInt inner_product(const CycVector& u, const CycVector& v);
bool orthogonal(const CycVector& u, const CycVector& v);
/// Entrywise (Hadamard) product u o v.
CycVector entrywise_product(const CycVector& u, const CycVector& v);

}  // namespace starks
