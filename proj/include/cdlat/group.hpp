#pragma once

// Small finite groups as explicit multiplication tables, plus the generic
// subgroup machinery (closure, full enumeration, centralizers, conjugation)
// used as the brute-force engine everywhere.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "cdlat/numth.hpp"
#include "cdlat/zm_params.hpp"

namespace cdlat {

// Subgroup enumeration cost is superlinear in the subgroup count, so group
// orders are capped. Overridable per call (CLI: env var CD_LATTICE_CAP).
inline constexpr int kDefaultOrderCap = 512;

class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Family { cyclic, dihedral, zm, product, custom };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::cyclic: return "cyclic";
    case Family::dihedral: return "dihedral";
    case Family::zm: return "zm";
    case Family::product: return "product";
    default: return "custom";
  }
}

struct GroupTable {
  int order = 1;
  std::vector<int> mul;  // row-major order x order, values are element indices
  int identity = 0;
  std::vector<int> inverse;
  std::vector<std::string> names;
  Family family = Family::custom;
  std::vector<u64> params;  // construction parameters, family specific

  int at(int a, int b) const {
    return mul[static_cast<std::size_t>(a) * order + b];
  }
  // g^-1 h g
  int conj(int h, int g) const { return at(at(inverse[g], h), g); }
};

// A subgroup as its canonical (ascending, duplicate-free) element index
// list; equality is list equality. `parent` identifies the ambient group
// and is context, not part of the value.
struct SubgroupSet {
  const GroupTable* parent = nullptr;
  std::vector<int> members;

  int size() const { return static_cast<int>(members.size()); }
  bool contains(int g) const {
    return std::binary_search(members.begin(), members.end(), g);
  }
  bool contains_all(const SubgroupSet& other) const {
    return std::includes(members.begin(), members.end(),
                         other.members.begin(), other.members.end());
  }
  friend bool operator==(const SubgroupSet& a, const SubgroupSet& b) {
    return a.members == b.members;
  }
};

// Deterministic ordering: by size, then lexicographic on the index list.
inline bool subgroup_less(const SubgroupSet& a, const SubgroupSet& b) {
  if (a.members.size() != b.members.size()) {
    return a.members.size() < b.members.size();
  }
  return a.members < b.members;
}

namespace detail {

inline std::string power_name(const char* base, u64 exp) {
  if (exp == 0) return "1";
  if (exp == 1) return base;
  return std::string(base) + "^" + std::to_string(exp);
}

// b^x a^y with the convention that zero exponents vanish.
inline std::string bx_ay_name(u64 x, u64 y) {
  if (x == 0) return power_name("a", y);
  if (y == 0) return power_name("b", x);
  return power_name("b", x) + power_name("a", y);
}

inline void fill_inverses(GroupTable& g) {
  g.inverse.assign(g.order, -1);
  for (int i = 0; i < g.order; ++i) {
    for (int j = 0; j < g.order; ++j) {
      if (g.at(i, j) == g.identity) {
        g.inverse[i] = j;
        break;
      }
    }
  }
}

}  // namespace detail

// Cyclic group Z_n; element i is a^i, mul(i,j) = (i+j) mod n.
inline GroupTable build_cyclic(u64 n) {
  if (n == 0) {
    throw std::domain_error("build_cyclic: n must be >= 1");
  }
  GroupTable g;
  g.order = static_cast<int>(n);
  g.family = Family::cyclic;
  g.params = {n};
  g.mul.resize(n * n);
  g.names.reserve(n);
  for (u64 i = 0; i < n; ++i) {
    g.names.push_back(detail::power_name("a", i));
    for (u64 j = 0; j < n; ++j) {
      g.mul[i * n + j] = static_cast<int>((i + j) % n);
    }
  }
  detail::fill_inverses(g);
  return g;
}

// Dihedral group of order 2m; index x*m + y encodes b^x a^y with a^m =
// b^2 = 1 and b^-1 a b = a^-1. m in {1,2} is degenerate (order 2 cyclic,
// Klein four) and only allowed for product experiments.
inline GroupTable build_dihedral(u64 m, bool allow_small = false) {
  if (m == 0) {
    throw std::domain_error("build_dihedral: m must be >= 1");
  }
  if (m < 3 && !allow_small) {
    throw std::domain_error("build_dihedral: m must be >= 3");
  }
  GroupTable g;
  g.order = static_cast<int>(2 * m);
  g.family = Family::dihedral;
  g.params = {m};
  g.mul.resize(static_cast<std::size_t>(g.order) * g.order);
  g.names.reserve(g.order);
  for (u64 x = 0; x < 2; ++x) {
    for (u64 y = 0; y < m; ++y) {
      g.names.push_back(detail::bx_ay_name(x, y));
    }
  }
  for (int i = 0; i < g.order; ++i) {
    const u64 x1 = static_cast<u64>(i) / m;
    const u64 y1 = static_cast<u64>(i) % m;
    for (int j = 0; j < g.order; ++j) {
      const u64 x2 = static_cast<u64>(j) / m;
      const u64 y2 = static_cast<u64>(j) % m;
      const u64 y1c = x2 == 1 ? (m - y1) % m : y1;  // b^-1 a b = a^-1
      const u64 x = (x1 + x2) % 2;
      const u64 y = (y1c + y2) % m;
      g.mul[static_cast<std::size_t>(i) * g.order + j] =
          static_cast<int>(x * m + y);
    }
  }
  detail::fill_inverses(g);
  return g;
}

// ZM(m,n,r); index x*m + y encodes b^x a^y, and
// (b^x1 a^y1)(b^x2 a^y2) = b^(x1+x2) a^(r^x2 y1 + y2).
inline GroupTable build_zm(const ZmParams& p) {
  GroupTable g;
  g.order = static_cast<int>(p.m * p.n);
  g.family = Family::zm;
  g.params = {p.m, p.n, p.r, p.d};
  g.mul.resize(static_cast<std::size_t>(g.order) * g.order);
  g.names.reserve(g.order);
  for (u64 x = 0; x < p.n; ++x) {
    for (u64 y = 0; y < p.m; ++y) {
      g.names.push_back(detail::bx_ay_name(x, y));
    }
  }
  // r^x mod m for all x < n
  std::vector<u64> rpow(p.n);
  rpow[0] = 1 % p.m;
  for (u64 x = 1; x < p.n; ++x) {
    rpow[x] = mul_mod(rpow[x - 1], p.r % p.m, p.m);
  }
  for (int i = 0; i < g.order; ++i) {
    const u64 x1 = static_cast<u64>(i) / p.m;
    const u64 y1 = static_cast<u64>(i) % p.m;
    for (int j = 0; j < g.order; ++j) {
      const u64 x2 = static_cast<u64>(j) / p.m;
      const u64 y2 = static_cast<u64>(j) % p.m;
      const u64 x = (x1 + x2) % p.n;
      const u64 y = (mul_mod(rpow[x2], y1, p.m) + y2) % p.m;
      g.mul[static_cast<std::size_t>(i) * g.order + j] =
          static_cast<int>(x * p.m + y);
    }
  }
  detail::fill_inverses(g);
  return g;
}

inline int element_power(const GroupTable& g, int elem, long long k) {
  if (k < 0) {
    elem = g.inverse[elem];
    k = -k;
  }
  int acc = g.identity;
  int base = elem;
  unsigned long long e = static_cast<unsigned long long>(k);
  while (e > 0) {
    if (e & 1) acc = g.at(acc, base);
    base = g.at(base, base);
    e >>= 1;
  }
  return acc;
}

inline int element_order(const GroupTable& g, int elem) {
  int k = 1;
  int p = elem;
  while (p != g.identity) {
    p = g.at(p, elem);
    ++k;
  }
  return k;
}

// Smallest subgroup containing the seed, by product saturation. Inverses
// come for free in a finite group.
inline SubgroupSet closure(const GroupTable& g, const std::vector<int>& seed) {
  std::vector<char> in(g.order, 0);
  std::vector<int> elems;
  std::deque<int> work;
  in[g.identity] = 1;
  elems.push_back(g.identity);
  for (int s : seed) {
    if (!in[s]) {
      in[s] = 1;
      elems.push_back(s);
      work.push_back(s);
    }
  }
  while (!work.empty()) {
    const int x = work.front();
    work.pop_front();
    const std::size_t snapshot = elems.size();
    for (std::size_t i = 0; i < snapshot; ++i) {
      const int y = elems[i];
      for (int p : {g.at(x, y), g.at(y, x)}) {
        if (!in[p]) {
          in[p] = 1;
          elems.push_back(p);
          work.push_back(p);
        }
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return SubgroupSet{&g, std::move(elems)};
}

inline SubgroupSet trivial_subgroup(const GroupTable& g) {
  return SubgroupSet{&g, {g.identity}};
}

inline SubgroupSet whole_group(const GroupTable& g) {
  std::vector<int> all(g.order);
  for (int i = 0; i < g.order; ++i) all[i] = i;
  return SubgroupSet{&g, std::move(all)};
}

inline SubgroupSet subgroup_join(const GroupTable& g, const SubgroupSet& a,
                                 const SubgroupSet& b) {
  std::vector<int> seed = a.members;
  seed.insert(seed.end(), b.members.begin(), b.members.end());
  return closure(g, seed);
}

inline SubgroupSet subgroup_meet(const GroupTable& g, const SubgroupSet& a,
                                 const SubgroupSet& b) {
  std::vector<int> common;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(),
                        b.members.end(), std::back_inserter(common));
  return SubgroupSet{&g, std::move(common)};
}

// Every subgroup, sorted by (size, index list). All cyclic subgroups are
// generated first, then the collection is closed under pairwise join.
inline std::vector<SubgroupSet> all_subgroups(const GroupTable& g,
                                              int cap = kDefaultOrderCap) {
  if (g.order > cap) {
    throw capacity_error("all_subgroups: group order " +
                         std::to_string(g.order) + " exceeds cap " +
                         std::to_string(cap));
  }
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> list;
  for (int e = 0; e < g.order; ++e) {
    auto cyc = closure(g, {e}).members;
    if (seen.insert(cyc).second) {
      list.push_back(std::move(cyc));
    }
  }
  std::size_t processed = 0;
  while (processed < list.size()) {
    const std::size_t end = list.size();
    for (std::size_t i = processed; i < end; ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        std::vector<int> seed = list[i];
        seed.insert(seed.end(), list[j].begin(), list[j].end());
        auto joined = closure(g, seed).members;
        if (seen.insert(joined).second) {
          list.push_back(std::move(joined));
        }
      }
    }
    processed = end;
  }
  std::vector<SubgroupSet> out;
  out.reserve(list.size());
  for (auto& m : list) {
    out.push_back(SubgroupSet{&g, std::move(m)});
  }
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

// Commutation is tested against every element of H, not just generators.
inline SubgroupSet centralizer(const GroupTable& g, const SubgroupSet& h) {
  std::vector<int> elems;
  for (int x = 0; x < g.order; ++x) {
    bool commutes = true;
    for (int y : h.members) {
      if (g.at(x, y) != g.at(y, x)) {
        commutes = false;
        break;
      }
    }
    if (commutes) elems.push_back(x);
  }
  return SubgroupSet{&g, std::move(elems)};
}

inline SubgroupSet center(const GroupTable& g) {
  return centralizer(g, whole_group(g));
}

inline SubgroupSet conjugate_subgroup(const GroupTable& g,
                                      const SubgroupSet& h, int by) {
  std::vector<int> elems;
  elems.reserve(h.members.size());
  for (int x : h.members) {
    elems.push_back(g.conj(x, by));
  }
  std::sort(elems.begin(), elems.end());
  return SubgroupSet{&g, std::move(elems)};
}

inline bool is_normal(const GroupTable& g, const SubgroupSet& h) {
  for (int by = 0; by < g.order; ++by) {
    for (int x : h.members) {
      if (!h.contains(g.conj(x, by))) return false;
    }
  }
  return true;
}

inline bool is_abelian_subgroup(const GroupTable& g, const SubgroupSet& h) {
  for (int x : h.members) {
    for (int y : h.members) {
      if (g.at(x, y) != g.at(y, x)) return false;
    }
  }
  return true;
}

inline bool is_abelian(const GroupTable& g) {
  return is_abelian_subgroup(g, whole_group(g));
}

// Componentwise product; element (i, j) sits at index i * |H| + j.
inline GroupTable direct_product(const GroupTable& a, const GroupTable& b,
                                 int cap = kDefaultOrderCap) {
  const long long order = static_cast<long long>(a.order) * b.order;
  if (order > cap) {
    throw capacity_error("direct_product: order " + std::to_string(order) +
                         " exceeds cap " + std::to_string(cap));
  }
  GroupTable g;
  g.order = static_cast<int>(order);
  g.family = Family::product;
  g.params = {static_cast<u64>(a.order), static_cast<u64>(b.order)};
  g.identity = a.identity * b.order + b.identity;
  g.mul.resize(static_cast<std::size_t>(g.order) * g.order);
  g.names.reserve(g.order);
  for (int i = 0; i < a.order; ++i) {
    for (int j = 0; j < b.order; ++j) {
      g.names.push_back("(" + a.names[i] + "," + b.names[j] + ")");
    }
  }
  for (int i = 0; i < g.order; ++i) {
    const int a1 = i / b.order;
    const int b1 = i % b.order;
    for (int j = 0; j < g.order; ++j) {
      const int a2 = j / b.order;
      const int b2 = j % b.order;
      g.mul[static_cast<std::size_t>(i) * g.order + j] =
          a.at(a1, a2) * b.order + b.at(b1, b2);
    }
  }
  detail::fill_inverses(g);
  return g;
}

// Exhaustive table audit: Latin square rows/columns, two-sided identity,
// two-sided inverses, associativity.
inline bool audit_group(const GroupTable& g) {
  const int n = g.order;
  if (n < 1 || g.mul.size() != static_cast<std::size_t>(n) * n ||
      g.inverse.size() != static_cast<std::size_t>(n) ||
      g.names.size() != static_cast<std::size_t>(n) || g.identity < 0 ||
      g.identity >= n) {
    return false;
  }
  for (int v : g.mul) {
    if (v < 0 || v >= n) return false;
  }
  std::vector<char> seen(n);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      if (seen[g.at(i, j)]++) return false;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      if (seen[g.at(j, i)]++) return false;
    }
    if (g.at(g.identity, i) != i || g.at(i, g.identity) != i) return false;
    const int inv = g.inverse[i];
    if (inv < 0 || inv >= n) return false;
    if (g.at(i, inv) != g.identity || g.at(inv, i) != g.identity) return false;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int ij = g.at(i, j);
      for (int k = 0; k < n; ++k) {
        if (g.at(ij, k) != g.at(i, g.at(j, k))) return false;
      }
    }
  }
  return true;
}

}  // namespace cdlat
