#pragma once

// Per-group cross-validation of the closed-form ZM machinery against the
// brute-force table engine, plus the dihedral regression checks. The sweep
// commands and the acceptance suite are both built on these.

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cdlat/cd.hpp"
#include "cdlat/group.hpp"
#include "cdlat/zm.hpp"

namespace cdlat {

struct ZmGroupCheck {
  ZmParams params;
  bool audit_ok = false;
  bool power_formula_ok = false;
  bool center_ok = false;
  bool bijection_ok = false;
  bool lemma3_measure_ok = false;
  bool lemma3_centralizer_ok = false;
  bool normality_ok = false;
  bool conjugacy_ok = false;
  bool theorem1_ok = false;
  bool double_centralizer_ok = false;
  CdChecks lattice_checks;
  std::size_t subgroup_count = 0;
  u64 max_measure = 0;
  std::string first_failure;

  bool all_ok() const {
    return audit_ok && power_formula_ok && center_ok && bijection_ok &&
           lemma3_measure_ok && lemma3_centralizer_ok && normality_ok &&
           conjugacy_ok && theorem1_ok && double_centralizer_ok &&
           lattice_checks.all();
  }
};

namespace detail {

inline void note_failure(ZmGroupCheck& check, const std::string& what) {
  if (check.first_failure.empty()) check.first_failure = what;
}

// Lexicographically least conjugate, as a canonical conjugacy-class key.
inline std::vector<int> conjugacy_class_key(const GroupTable& g,
                                            const SubgroupSet& h) {
  std::vector<int> best = h.members;
  for (int by = 0; by < g.order; ++by) {
    auto conj = conjugate_subgroup(g, h, by).members;
    if (conj < best) best = std::move(conj);
  }
  return best;
}

}  // namespace detail

inline ZmGroupCheck check_zm_group(const ZmParams& p,
                                   int cap = kDefaultOrderCap) {
  ZmGroupCheck check;
  check.params = p;
  const GroupTable g = build_zm(p);

  check.audit_ok = audit_group(g);
  if (!check.audit_ok) detail::note_failure(check, "table audit failed");

  check.power_formula_ok = zm_power_formula_agrees(p, g);
  if (!check.power_formula_ok) {
    detail::note_failure(check, "closed power formula disagrees with table");
  }

  // Z(G) = <b^d>, of size n/d
  const SubgroupSet z = center(g);
  const SubgroupSet z_expected =
      closure(g, {static_cast<int>((p.d % p.n) * p.m)});
  check.center_ok =
      z == z_expected && static_cast<u64>(z.size()) == p.n / p.d;
  if (!check.center_ok) {
    detail::note_failure(check, "center differs from <b^d>");
  }

  const CdLatticeReport report = cd_lattice(g, cap);
  check.subgroup_count = report.subgroups.size();
  check.max_measure = report.max_measure;
  check.lattice_checks = report.checks;
  if (!report.checks.all()) {
    detail::note_failure(check, "a CD lattice property check failed");
  }

  const std::vector<ZmTriple> L = enumerate_L(p);
  std::vector<SubgroupSet> images;
  images.reserve(L.size());
  bool images_ok = true;
  for (const ZmTriple& t : L) {
    try {
      images.push_back(triple_to_subgroup(p, t, g));
    } catch (const std::logic_error& e) {
      images_ok = false;
      detail::note_failure(check, e.what());
      break;
    }
  }

  std::map<std::vector<int>, int> index_of;
  for (std::size_t i = 0; i < report.subgroups.size(); ++i) {
    index_of[report.subgroups[i].members] = static_cast<int>(i);
  }

  // Bijection: |L| = #subgroups and t -> H_t is injective onto them.
  check.bijection_ok = images_ok && L.size() == report.subgroups.size();
  if (check.bijection_ok) {
    std::set<std::vector<int>> distinct;
    for (const auto& h : images) {
      if (!index_of.count(h.members) || !distinct.insert(h.members).second) {
        check.bijection_ok = false;
        break;
      }
    }
  }
  if (!check.bijection_ok) {
    std::ostringstream os;
    os << "subgroup bijection failed: |L|=" << L.size()
       << " brute=" << report.subgroups.size();
    detail::note_failure(check, os.str());
  }

  if (images_ok) {
    check.lemma3_measure_ok = true;
    check.lemma3_centralizer_ok = true;
    check.normality_ok = true;
    for (std::size_t i = 0; i < L.size(); ++i) {
      const ZmTriple& t = L[i];
      const SubgroupSet& h = images[i];
      const u64 formula = measure_triple(p, t);
      u64 brute = 0;
      auto it = index_of.find(h.members);
      if (it != index_of.end()) {
        brute = report.measures[it->second];
      } else {
        brute = cd_measure(g, h);
      }
      if (formula != brute) {
        check.lemma3_measure_ok = false;
        std::ostringstream os;
        os << "measure mismatch at " << triple_to_string(t)
           << ": formula=" << formula << " brute=" << brute;
        detail::note_failure(check, os.str());
      }
      if (t.s == 0) {
        const ZmTriple ct = centralizer_triple(p, t);
        bool same = false;
        try {
          same = triple_to_subgroup(p, ct, g) == centralizer(g, h);
        } catch (const std::logic_error&) {
          same = false;
        }
        if (!same) {
          check.lemma3_centralizer_ok = false;
          detail::note_failure(check, "centralizer mismatch at " +
                                          triple_to_string(t) + " -> " +
                                          triple_to_string(ct));
        }
      }
      if (is_normal_triple(p, t) != is_normal(g, h)) {
        check.normality_ok = false;
        detail::note_failure(check,
                             "normality mismatch at " + triple_to_string(t));
      }
    }

    // Conjugacy criterion vs. brute-force conjugacy, over all pairs.
    std::vector<std::vector<int>> keys;
    keys.reserve(L.size());
    for (const auto& h : images) {
      keys.push_back(detail::conjugacy_class_key(g, h));
    }
    check.conjugacy_ok = true;
    for (std::size_t i = 0; i < L.size() && check.conjugacy_ok; ++i) {
      for (std::size_t j = 0; j < L.size(); ++j) {
        const bool criterion = are_conjugate_triples(p, L[i], L[j]);
        const bool brute = keys[i] == keys[j];
        if (criterion != brute) {
          check.conjugacy_ok = false;
          detail::note_failure(check, "conjugacy mismatch at " +
                                          triple_to_string(L[i]) + " vs " +
                                          triple_to_string(L[j]));
          break;
        }
      }
    }
  }

  // Theorem 1: formula mode, scan mode, and the brute-force CD lattice
  // must name the same unique subgroup and the same maximum measure.
  const CdZmResult formula = cd_zm(p, CdZmMode::formula);
  const CdZmResult scan = cd_zm(p, CdZmMode::scan);
  check.theorem1_ok = formula == scan && report.members.size() == 1 &&
                      report.max_measure == formula.max_measure;
  if (check.theorem1_ok && images_ok) {
    try {
      check.theorem1_ok =
          triple_to_subgroup(p, formula.members.front(), g) ==
          report.members.front();
    } catch (const std::logic_error&) {
      check.theorem1_ok = false;
    }
  }
  if (!check.theorem1_ok) {
    std::ostringstream os;
    os << "theorem-1 disagreement: formula={H" ;
    for (const auto& t : formula.members) os << triple_to_string(t);
    os << ", " << formula.max_measure << "} scan={";
    for (const auto& t : scan.members) os << triple_to_string(t);
    os << ", " << scan.max_measure << "} brute={" << report.members.size()
       << " members, " << report.max_measure << "}";
    detail::note_failure(check, os.str());
  }

  const ZmTriple cd_member{1, p.d, 0};
  check.double_centralizer_ok =
      centralizer_triple(p, centralizer_triple(p, cd_member)) == cd_member;
  if (!check.double_centralizer_ok) {
    detail::note_failure(check, "C(C(H)) != H on the CD member");
  }

  return check;
}

// All valid (m, n, r) with mn <= max_order: the m = 1 degenerate for every
// n, and r in [2, m-1] filtered by the presentation conditions. Distinct r
// giving isomorphic groups are kept. Sorted by (mn, m, n, r).
inline std::vector<ZmParams> enumerate_valid_zm(u64 max_order) {
  std::vector<ZmParams> out;
  for (u64 n = 1; n <= max_order; ++n) {
    out.push_back(validate_params(1, n, 0));
  }
  for (u64 m = 3; m <= max_order; ++m) {
    for (u64 n = 2; m * n <= max_order; ++n) {
      if (gcd_u64(m, n) != 1) continue;
      for (u64 r = 2; r < m; ++r) {
        if (gcd_u64(m, r - 1) != 1) continue;
        if (mod_pow(r, n, m) != 1) continue;
        out.push_back(validate_params(m, n, r));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const ZmParams& a, const ZmParams& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    if (a.m != b.m) return a.m < b.m;
    if (a.n != b.n) return a.n < b.n;
    return a.r < b.r;
  });
  return out;
}

struct DihedralCheck {
  u64 m = 0;
  bool audit_ok = false;
  bool measure_ok = false;   // m(D_2m) = m^2
  bool members_ok = false;   // {<a>}, or the five-member set at m = 4
  bool zm_cross_ok = false;  // odd m: agrees with ZM(m, 2, m-1)
  CdChecks lattice_checks;
  u64 max_measure = 0;
  std::size_t cd_size = 0;
  std::string first_failure;

  bool all_ok() const {
    return audit_ok && measure_ok && members_ok && zm_cross_ok &&
           lattice_checks.all();
  }
};

inline DihedralCheck check_dihedral_group(u64 m, int cap = kDefaultOrderCap) {
  DihedralCheck check;
  check.m = m;
  const GroupTable g = build_dihedral(m);
  const auto note = [&](const std::string& what) {
    if (check.first_failure.empty()) check.first_failure = what;
  };

  check.audit_ok = audit_group(g);
  if (!check.audit_ok) note("table audit failed");

  const CdLatticeReport report = cd_lattice(g, cap);
  check.max_measure = report.max_measure;
  check.cd_size = report.members.size();
  check.lattice_checks = report.checks;
  if (!report.checks.all()) note("a CD lattice property check failed");

  check.measure_ok = report.max_measure == m * m;
  if (!check.measure_ok) note("max measure != m^2");

  const SubgroupSet rotations = closure(g, {1});  // <a>
  if (m == 4) {
    const int ab = g.at(1, static_cast<int>(m));  // a * b
    std::vector<SubgroupSet> expected = {
        closure(g, {2}),                          // <a^2>
        rotations,                                // <a>
        closure(g, {2, static_cast<int>(m)}),     // <a^2, b>
        closure(g, {2, ab}),                      // <a^2, ab>
        whole_group(g),
    };
    std::sort(expected.begin(), expected.end(), subgroup_less);
    check.members_ok = report.members.size() == expected.size();
    for (std::size_t i = 0; check.members_ok && i < expected.size(); ++i) {
      check.members_ok = report.members[i] == expected[i];
    }
  } else {
    check.members_ok =
        report.members.size() == 1 && report.members.front() == rotations;
  }
  if (!check.members_ok) note("CD members differ from the expected set");

  if (m % 2 == 1) {
    // D_2m = ZM(m, 2, m-1); the element encodings coincide, so the tables
    // must match entry for entry and the CD answers must be identical.
    const ZmParams p = validate_params(m, 2, m - 1);
    const GroupTable zg = build_zm(p);
    check.zm_cross_ok = zg.order == g.order && zg.mul == g.mul && p.d == 2;
    if (check.zm_cross_ok) {
      const CdZmResult formula = cd_zm(p, CdZmMode::formula);
      const CdZmResult scan = cd_zm(p, CdZmMode::scan);
      check.zm_cross_ok = formula == scan &&
                          formula.max_measure == report.max_measure &&
                          report.members.size() == 1;
      if (check.zm_cross_ok) {
        try {
          check.zm_cross_ok =
              triple_to_subgroup(p, formula.members.front(), g) ==
              report.members.front();
        } catch (const std::logic_error&) {
          check.zm_cross_ok = false;
        }
      }
    }
    if (!check.zm_cross_ok) note("ZM(m,2,m-1) cross-check failed");
  } else {
    check.zm_cross_ok = true;  // not applicable
  }

  return check;
}

}  // namespace cdlat
