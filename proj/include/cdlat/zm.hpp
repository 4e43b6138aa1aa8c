#pragma once

// Closed-form subgroup structure of ZM(m,n,r): the coordinate set L,
// the triple <-> subgroup bijection, and the exact centralizer / measure
// formulas. Everything is cross-checked against the table engine in
// group.hpp by the verification layer.

#include <string>
#include <vector>

#include "cdlat/group.hpp"
#include "cdlat/numth.hpp"
#include "cdlat/zm_params.hpp"

namespace cdlat {

// Coordinates of a subgroup of ZM(m,n,r): H = <a^m1, b^n1 a^s>, subject to
// m1 | m, n1 | n, s < m1 and m1 | s * (r^n - 1)/(r^n1 - 1). The subgroup
// has order mn / (m1 n1).
struct ZmTriple {
  u64 m1 = 1;
  u64 n1 = 1;
  u64 s = 0;

  friend bool operator==(const ZmTriple&, const ZmTriple&) = default;
  friend bool operator<(const ZmTriple& a, const ZmTriple& b) {
    if (a.m1 != b.m1) return a.m1 < b.m1;
    if (a.n1 != b.n1) return a.n1 < b.n1;
    return a.s < b.s;
  }
};

inline std::string triple_to_string(const ZmTriple& t) {
  return "(" + std::to_string(t.m1) + "," + std::to_string(t.n1) + "," +
         std::to_string(t.s) + ")";
}

// gcd(m, r^e - 1), with the power reduced mod m before the gcd.
inline u64 gcd_m_r_pow_minus_1(const ZmParams& p, u64 e) {
  const u64 residue = (mod_pow(p.r, e, p.m) + p.m - 1) % p.m;
  return residue == 0 ? p.m : gcd_u64(p.m, residue);
}

inline bool in_L(const ZmParams& p, const ZmTriple& t) {
  if (t.m1 == 0 || t.n1 == 0 || p.m % t.m1 != 0 || p.n % t.n1 != 0 ||
      t.s >= t.m1) {
    return false;
  }
  // m1 | s * (r^n - 1)/(r^n1 - 1), the quotient taken as a geometric sum
  const u64 quotient = geometric_sum_mod(p.r, t.n1, p.n / t.n1, t.m1);
  return mul_mod(t.s % t.m1, quotient, t.m1) == 0;
}

// All of L, ordered by (m1, n1, s).
inline std::vector<ZmTriple> enumerate_L(const ZmParams& p) {
  std::vector<ZmTriple> out;
  for (u64 m1 : divisors(p.m)) {
    for (u64 n1 : divisors(p.n)) {
      const u64 quotient = geometric_sum_mod(p.r, n1, p.n / n1, m1);
      for (u64 s = 0; s < m1; ++s) {
        if (mul_mod(s, quotient, m1) == 0) {
          out.push_back(ZmTriple{m1, n1, s});
        }
      }
    }
  }
  return out;
}

inline u64 triple_subgroup_order(const ZmParams& p, const ZmTriple& t) {
  return p.m * p.n / (t.m1 * t.n1);
}

// Materializes H_(m1,n1,s) = <a^m1, b^n1 a^s> inside the table built by
// build_zm(p). The closure size must match the order formula.
inline SubgroupSet triple_to_subgroup(const ZmParams& p, const ZmTriple& t,
                                      const GroupTable& g) {
  const int gen_a = static_cast<int>(t.m1 % p.m);                  // a^m1
  const int gen_b = static_cast<int>((t.n1 % p.n) * p.m + t.s);    // b^n1 a^s
  SubgroupSet h = closure(g, {gen_a, gen_b});
  if (static_cast<u64>(h.size()) != triple_subgroup_order(p, t)) {
    throw std::logic_error("triple_to_subgroup: order mismatch for " +
                           triple_to_string(t));
  }
  return h;
}

inline bool is_normal_triple(const ZmParams& p, const ZmTriple& t) {
  return t.s == 0 && mod_pow(p.r, t.n1, t.m1) == 1 % t.m1;
}

// Conjugacy in a ZM-group is determined by subgroup order alone.
inline bool are_conjugate_triples(const ZmParams& p, const ZmTriple& a,
                                  const ZmTriple& b) {
  return triple_subgroup_order(p, a) == triple_subgroup_order(p, b);
}

// C(H_(m1,n1,0)) = H_(m1',n1',0) with m1' = m / gcd(m, r^n1 - 1) and
// n1' = ord_{m/m1}(r).
inline ZmTriple centralizer_triple(const ZmParams& p, const ZmTriple& t) {
  if (t.s != 0) {
    throw std::domain_error(
        "centralizer_triple: only s = 0 representatives are supported");
  }
  const u64 g = gcd_m_r_pow_minus_1(p, t.n1);
  const u64 sub_m = p.m / t.m1;
  const u64 n1p = sub_m == 1 ? 1 : multiplicative_order(p.r % sub_m, sub_m);
  return ZmTriple{p.m / g, n1p, 0};
}

// m n^2 gcd(m, r^n1 - 1) / (m1 n1 ord_{m/m1}(r)); conjugation invariant,
// so any s is accepted. The quotient is always exact.
inline u64 measure_triple(const ZmParams& p, const ZmTriple& t) {
  const u64 g = gcd_m_r_pow_minus_1(p, t.n1);
  const u64 sub_m = p.m / t.m1;
  const u64 ord = sub_m == 1 ? 1 : multiplicative_order(p.r % sub_m, sub_m);
  const u128 numerator = static_cast<u128>(p.m) * p.n * p.n * g;
  const u64 denominator = t.m1 * t.n1 * ord;
  if (numerator % denominator != 0) {
    throw std::logic_error("measure_triple: non-integral measure for " +
                           triple_to_string(t));
  }
  return static_cast<u64>(numerator / denominator);
}

enum class CdZmMode { formula, scan };

struct CdZmResult {
  std::vector<ZmTriple> members;  // ordered by (m1, n1, s)
  u64 max_measure = 0;

  friend bool operator==(const CdZmResult&, const CdZmResult&) = default;
};

// formula: the direct answer {H_(1,d,0)} with measure m^2 n^2 / d^2.
// scan: argmax of measure_triple over all of L, independent of that answer.
inline CdZmResult cd_zm(const ZmParams& p, CdZmMode mode) {
  if (mode == CdZmMode::formula) {
    const u64 q = p.n / p.d;
    return CdZmResult{{ZmTriple{1, p.d, 0}}, p.m * q * p.m * q};
  }
  CdZmResult result;
  for (const ZmTriple& t : enumerate_L(p)) {
    const u64 value = measure_triple(p, t);
    if (value > result.max_measure) {
      result.max_measure = value;
      result.members.clear();
    }
    if (value == result.max_measure) {
      result.members.push_back(t);
    }
  }
  return result;
}

// Table-iterated powers of every element against the closed power formula
// alpha(x,y)^k = b^(kx) a^(y * (r^kx - 1)/(r^x - 1)), for 0 <= k <= mn.
inline bool zm_power_formula_agrees(const ZmParams& p, const GroupTable& g) {
  for (int e = 0; e < g.order; ++e) {
    const u64 x = static_cast<u64>(e) / p.m;
    const u64 y = static_cast<u64>(e) % p.m;
    const u64 rx = mod_pow(p.r, x, p.m);
    int iterated = g.identity;
    u64 sum = 0;        // sum_{i<k} r^(xi) mod m
    u64 rxk = 1 % p.m;  // r^(xk) mod m
    for (u64 k = 0; k <= p.m * p.n; ++k) {
      const u64 xk = (x * k) % p.n;
      const u64 yk = mul_mod(y, sum, p.m);
      if (iterated != static_cast<int>(xk * p.m + yk)) return false;
      iterated = g.at(iterated, e);
      sum = (sum + rxk) % p.m;
      rxk = mul_mod(rxk, rx, p.m);
    }
  }
  return true;
}

}  // namespace cdlat
