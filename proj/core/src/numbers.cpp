#include "starks/numbers.hpp"

#include <cstdlib>

namespace starks {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long long gcd_ll(long long a, long long b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b != 0) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long lcm_ll(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  return std::llabs(a / gcd_ll(a, b) * b);
}

long long mod_inverse(long long a, long long p) {
  long long old_r = mod(a, p), r = p;
  long long old_s = 1, s = 0;
  while (r != 0) {
    long long q = old_r / r;
    long long t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw InvalidArgument("no inverse of " + std::to_string(a) + " modulo " + std::to_string(p));
  return mod(old_s, p);
}

}  // namespace starks
