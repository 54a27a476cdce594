#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace starks {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Thrown for malformed arguments to any construction in this library.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

inline Rational make_rational(long long num, long long den = 1) {
  Rational q{BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))};
  q.canonicalize();
  return q;
}

bool is_prime(long long n);
long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);
/// Non-negative residue of a modulo m (m > 0).
inline long long mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}
/// Inverse of a modulo a prime p; throws when a is divisible by p.
long long mod_inverse(long long a, long long p);

}  // namespace starks
