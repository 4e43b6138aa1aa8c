#pragma once

// Exact modular arithmetic helpers. Everything here is integer-only;
// quotients of the form (r^a - 1) / (r^b - 1) are always evaluated as
// geometric sums at the target modulus, never as big-integer division.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cdlat {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 gcd_u64(u64 a, u64 b) {
  if (a == 0 && b == 0) {
    throw std::domain_error("gcd(0,0) is undefined");
  }
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline u64 mul_mod(u64 a, u64 b, u64 modulus) {
  return static_cast<u64>(static_cast<u128>(a) * b % modulus);
}

inline u64 mod_pow(u64 base, u64 exp, u64 modulus) {
  if (modulus == 0) {
    throw std::domain_error("mod_pow: modulus must be >= 1");
  }
  u64 result = 1 % modulus;
  base %= modulus;
  while (exp > 0) {
    if (exp & 1) {
      result = mul_mod(result, base, modulus);
    }
    base = mul_mod(base, base, modulus);
    exp >>= 1;
  }
  return result;
}

// Least k >= 1 with r^k = 1 (mod m). Requires gcd(r, m) = 1.
inline u64 multiplicative_order(u64 r, u64 m) {
  if (m == 0) {
    throw std::domain_error("multiplicative_order: modulus must be >= 1");
  }
  if (m == 1) {
    return 1;
  }
  r %= m;
  if (gcd_u64(r, m) != 1) {
    throw std::domain_error("multiplicative_order: arguments must be coprime");
  }
  u64 k = 1;
  u64 p = r;
  while (p != 1) {
    p = mul_mod(p, r, m);
    ++k;
  }
  return k;
}

// All positive divisors of n, ascending.
inline std::vector<u64> divisors(u64 n) {
  if (n == 0) {
    throw std::domain_error("divisors: argument must be >= 1");
  }
  std::vector<u64> small;
  std::vector<u64> large;
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) {
        large.push_back(n / d);
      }
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline u64 euler_phi(u64 n) {
  if (n == 0) {
    throw std::domain_error("euler_phi: argument must be >= 1");
  }
  u64 result = n;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) {
        n /= p;
      }
    }
  }
  if (n > 1) {
    result -= result / n;
  }
  return result;
}

// Sum_{i=0}^{terms-1} r^(step*i) mod modulus, i.e. the exact value of
// (r^(step*terms) - 1) / (r^step - 1) reduced at the modulus.
inline u64 geometric_sum_mod(u64 r, u64 step, u64 terms, u64 modulus) {
  if (modulus == 0) {
    throw std::domain_error("geometric_sum_mod: modulus must be >= 1");
  }
  const u64 ratio = mod_pow(r, step, modulus);
  u64 acc = 0;
  u64 term = 1 % modulus;
  for (u64 i = 0; i < terms; ++i) {
    acc = (acc + term) % modulus;
    term = mul_mod(term, ratio, modulus);
  }
  return acc;
}

}  // namespace cdlat
