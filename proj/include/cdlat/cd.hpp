#pragma once

// Chermak-Delgado measures, the CD lattice report, and the structural
// verifiers (sublattice, self-duality, modularity, minimum member,
// direct-product decomposition). Joins and meets are always recomputed
// as closure-of-union and intersection, keeping the verifiers independent
// of the subgroup enumeration.

#include <utility>
#include <vector>

#include "cdlat/group.hpp"

namespace cdlat {

inline u64 cd_measure(const GroupTable& g, const SubgroupSet& h) {
  return static_cast<u64>(h.size()) *
         static_cast<u64>(centralizer(g, h).size());
}

struct CdChecks {
  bool is_sublattice = false;
  bool is_self_dual = false;
  bool is_modular = false;
  bool min_is_abelian = false;
  bool min_is_normal = false;
  bool min_contains_center = false;

  bool all() const {
    return is_sublattice && is_self_dual && is_modular && min_is_abelian &&
           min_is_normal && min_contains_center;
  }
};

struct MinMemberChecks {
  bool is_member = false;  // the intersection of all members is a member
  bool is_abelian = false;
  bool is_normal = false;
  bool contains_center = false;
};

struct CdLatticeReport {
  std::vector<SubgroupSet> subgroups;   // every subgroup, (size, lex) order
  std::vector<u64> measures;            // parallel to subgroups
  std::vector<int> centralizer_orders;  // parallel to subgroups
  u64 max_measure = 0;
  std::vector<SubgroupSet> members;  // CD(G), same ordering
  SubgroupSet min_member;            // intersection of all members
  std::vector<std::pair<int, int>> hasse_edges;  // cover pairs in members
  CdChecks checks;
};

inline bool verify_sublattice(const GroupTable& g, const CdLatticeReport& r) {
  const auto is_member = [&](const SubgroupSet& h) {
    for (const auto& m : r.members) {
      if (m == h) return true;
    }
    return false;
  };
  for (const auto& x : r.members) {
    for (const auto& y : r.members) {
      if (!is_member(subgroup_join(g, x, y))) return false;
      if (!is_member(subgroup_meet(g, x, y))) return false;
    }
  }
  return true;
}

// H -> C_G(H) maps members to members, is an involution on them, and
// reverses containment.
inline bool verify_self_dual(const GroupTable& g, const CdLatticeReport& r) {
  std::vector<SubgroupSet> duals;
  duals.reserve(r.members.size());
  for (const auto& h : r.members) {
    duals.push_back(centralizer(g, h));
  }
  const auto member_index = [&](const SubgroupSet& h) -> int {
    for (std::size_t i = 0; i < r.members.size(); ++i) {
      if (r.members[i] == h) return static_cast<int>(i);
    }
    return -1;
  };
  for (std::size_t i = 0; i < r.members.size(); ++i) {
    if (member_index(duals[i]) < 0) return false;
    if (!(centralizer(g, duals[i]) == r.members[i])) return false;
  }
  for (std::size_t i = 0; i < r.members.size(); ++i) {
    for (std::size_t j = 0; j < r.members.size(); ++j) {
      if (r.members[j].contains_all(r.members[i]) &&
          !duals[i].contains_all(duals[j])) {
        return false;
      }
    }
  }
  return true;
}

// x v (y ^ z) = (x v y) ^ z whenever x <= z, over all member triples.
inline bool verify_modular(const CdLatticeReport& r) {
  if (r.members.empty()) return true;
  const GroupTable& g = *r.members.front().parent;
  for (const auto& x : r.members) {
    for (const auto& z : r.members) {
      if (!z.contains_all(x)) continue;
      for (const auto& y : r.members) {
        const auto lhs = subgroup_join(g, x, subgroup_meet(g, y, z));
        const auto rhs = subgroup_meet(g, subgroup_join(g, x, y), z);
        if (!(lhs == rhs)) return false;
      }
    }
  }
  return true;
}

inline MinMemberChecks verify_min_member(const GroupTable& g,
                                         const CdLatticeReport& r) {
  MinMemberChecks out;
  for (const auto& m : r.members) {
    if (m == r.min_member) {
      out.is_member = true;
      break;
    }
  }
  out.is_abelian = is_abelian_subgroup(g, r.min_member);
  out.is_normal = is_normal(g, r.min_member);
  out.contains_center = r.min_member.contains_all(center(g));
  return out;
}

inline CdLatticeReport cd_lattice(const GroupTable& g,
                                  int cap = kDefaultOrderCap) {
  CdLatticeReport r;
  r.subgroups = all_subgroups(g, cap);
  r.measures.reserve(r.subgroups.size());
  r.centralizer_orders.reserve(r.subgroups.size());
  for (const auto& h : r.subgroups) {
    const int c = centralizer(g, h).size();
    r.centralizer_orders.push_back(c);
    r.measures.push_back(static_cast<u64>(h.size()) * c);
    if (r.measures.back() > r.max_measure) r.max_measure = r.measures.back();
  }
  for (std::size_t i = 0; i < r.subgroups.size(); ++i) {
    if (r.measures[i] == r.max_measure) {
      r.members.push_back(r.subgroups[i]);
    }
  }
  r.min_member = r.members.front();
  for (const auto& m : r.members) {
    r.min_member = subgroup_meet(g, r.min_member, m);
  }
  // cover relation of containment restricted to members; the (size, lex)
  // ordering guarantees lower index < upper index on every edge
  const int k = static_cast<int>(r.members.size());
  std::vector<std::vector<char>> below(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      below[i][j] = i != j && r.members[j].contains_all(r.members[i]);
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (!below[i][j]) continue;
      bool cover = true;
      for (int mid = 0; mid < k && cover; ++mid) {
        if (below[i][mid] && below[mid][j]) cover = false;
      }
      if (cover) r.hasse_edges.emplace_back(i, j);
    }
  }
  const MinMemberChecks mm = verify_min_member(g, r);
  r.checks.is_sublattice = verify_sublattice(g, r);
  r.checks.is_self_dual = verify_self_dual(g, r);
  r.checks.is_modular = verify_modular(r);
  r.checks.min_is_abelian = mm.is_member && mm.is_abelian;
  r.checks.min_is_normal = mm.is_member && mm.is_normal;
  r.checks.min_contains_center = mm.is_member && mm.contains_center;
  return r;
}

// CD(A x B) must equal {H x K | H in CD(A), K in CD(B)}, with
// m(A x B) = m(A) m(B).
inline bool verify_product_decomposition(const GroupTable& a,
                                         const GroupTable& b,
                                         int cap = kDefaultOrderCap) {
  const GroupTable prod = direct_product(a, b, cap);
  const CdLatticeReport ra = cd_lattice(a, cap);
  const CdLatticeReport rb = cd_lattice(b, cap);
  const CdLatticeReport rp = cd_lattice(prod, cap);
  if (rp.max_measure != ra.max_measure * rb.max_measure) return false;
  if (rp.members.size() != ra.members.size() * rb.members.size()) {
    return false;
  }
  std::vector<std::vector<int>> expected;
  for (const auto& h : ra.members) {
    for (const auto& k : rb.members) {
      std::vector<int> embedded;
      embedded.reserve(h.members.size() * k.members.size());
      for (int i : h.members) {
        for (int j : k.members) {
          embedded.push_back(i * b.order + j);
        }
      }
      expected.push_back(std::move(embedded));
    }
  }
  std::sort(expected.begin(), expected.end(),
            [](const std::vector<int>& x, const std::vector<int>& y) {
              if (x.size() != y.size()) return x.size() < y.size();
              return x < y;
            });
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (rp.members[i].members != expected[i]) return false;
  }
  return true;
}

}  // namespace cdlat
