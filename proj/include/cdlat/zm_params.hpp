#pragma once

#include <string>

#include "cdlat/numth.hpp"

namespace cdlat {

// Validated presentation parameters of ZM(m,n,r) = <a,b | a^m = b^n = 1,
// b^-1 a b = a^r>, with d the multiplicative order of r modulo m.
// The degenerate case m = 1 (cyclic group of order n) is represented
// with r = 0 and d = 1.
struct ZmParams {
  u64 m = 1;
  u64 n = 1;
  u64 r = 0;
  u64 d = 1;

  u64 order() const { return m * n; }
  friend bool operator==(const ZmParams&, const ZmParams&) = default;
};

enum class ZmParamError {
  range,                    // m or n < 1, or r outside [0, m)
  coprimality_mn,           // gcd(m, n) != 1
  coprimality_m_r_minus_1,  // gcd(m, r-1) != 1
  exponent,                 // r^n != 1 (mod m)
};

class zm_validation_error : public std::domain_error {
 public:
  zm_validation_error(ZmParamError kind, const std::string& what)
      : std::domain_error(what), kind_(kind) {}
  ZmParamError kind() const { return kind_; }

 private:
  ZmParamError kind_;
};

inline ZmParams validate_params(u64 m, u64 n, u64 r) {
  if (m == 0 || n == 0) {
    throw zm_validation_error(ZmParamError::range, "zm: m and n must be >= 1");
  }
  if (m == 1) {
    if (r != 0) {
      throw zm_validation_error(ZmParamError::range,
                                "zm: m = 1 requires the representative r = 0");
    }
  } else if (r >= m) {
    throw zm_validation_error(ZmParamError::range, "zm: r must lie in [0, m)");
  }
  if (gcd_u64(m, n) != 1) {
    throw zm_validation_error(ZmParamError::coprimality_mn,
                              "zm: gcd(m, n) != 1");
  }
  if (m > 1 && gcd_u64(m, (r + m - 1) % m) != 1) {
    throw zm_validation_error(ZmParamError::coprimality_m_r_minus_1,
                              "zm: gcd(m, r-1) != 1");
  }
  if (mod_pow(r, n, m) != 1 % m) {
    throw zm_validation_error(ZmParamError::exponent,
                              "zm: r^n != 1 (mod m)");
  }
  ZmParams p;
  p.m = m;
  p.n = n;
  p.r = m == 1 ? 0 : r;
  p.d = m == 1 ? 1 : multiplicative_order(r, m);
  return p;  // d | n follows from r^n = 1 (mod m)
}

}  // namespace cdlat
