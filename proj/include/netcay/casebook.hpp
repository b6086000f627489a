#pragma once

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "netcay/cayley.hpp"
#include "netcay/dihedral.hpp"
#include "netcay/frattini.hpp"
#include "netcay/graph.hpp"
#include "netcay/parse.hpp"

namespace netcay {

struct Claim {
  std::string description;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct CaseReport {
  std::string case_id;
  std::string note;
  std::vector<Claim> claims;
  std::vector<std::string> artifacts;  // graph6 strings

  bool all_pass() const {
    for (const auto& c : claims)
      if (!c.pass) return false;
    return true;
  }
};

inline nlohmann::ordered_json to_json(const CaseReport& r) {
  nlohmann::ordered_json j;
  j["case_id"] = r.case_id;
  j["note"] = r.note;
  j["pass"] = r.all_pass();
  j["claims"] = nlohmann::ordered_json::array();
  for (const auto& c : r.claims)
    j["claims"].push_back({{"description", c.description},
                           {"expected", c.expected},
                           {"computed", c.computed},
                           {"pass", c.pass}});
  j["artifacts"] = r.artifacts;
  return j;
}

namespace caselib {

inline std::string show_ids(const std::vector<int>& ids) {
  std::string s = "{";
  for (size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + std::to_string(ids[i]);
  return s + "}";
}

inline void claim(CaseReport& rep, const std::string& desc, const std::string& expected,
                  const std::string& computed) {
  rep.claims.push_back(Claim{desc, expected, computed, expected == computed});
}

inline void claim_eq(CaseReport& rep, const std::string& desc, long long expected, long long computed) {
  claim(rep, desc, std::to_string(expected), std::to_string(computed));
}

inline void claim_true(CaseReport& rep, const std::string& desc, bool computed) {
  claim(rep, desc, "true", computed ? "true" : "false");
}

inline void claim_iso(CaseReport& rep, const std::string& desc, const SimpleGraph& a,
                      const SimpleGraph& b, const Limits& lim) {
  claim(rep, desc, "isomorphic", graph_isomorphic(a, b, lim) ? "isomorphic" : "not isomorphic");
}

// ---- symmetric-group fixture (lexicographic-rank element ids) ---------------

inline std::vector<int> perm_unrank(int n, int rank) {
  std::vector<int> fact(n, 1);
  for (int i = 1; i < n; ++i) fact[i] = fact[i - 1] * i;
  std::vector<int> pool(n), out;
  for (int i = 0; i < n; ++i) pool[i] = i;
  for (int i = n - 1; i >= 0; --i) {
    int d = rank / fact[i];
    rank %= fact[i];
    out.push_back(pool[d]);
    pool.erase(pool.begin() + d);
  }
  return out;
}

inline int perm_rank(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  std::vector<int> fact(n, 1);
  for (int i = 1; i < n; ++i) fact[i] = fact[i - 1] * i;
  std::vector<int> pool;
  for (int i = 0; i < n; ++i) pool.push_back(i);
  int rank = 0;
  for (int i = 0; i < n; ++i) {
    auto it = std::find(pool.begin(), pool.end(), p[i]);
    rank += static_cast<int>(it - pool.begin()) * fact[n - 1 - i];
    pool.erase(it);
  }
  return rank;
}

inline bool perm_even(std::vector<int> p) {
  int swaps = 0;
  for (size_t i = 0; i < p.size(); ++i)
    while (p[i] != static_cast<int>(i)) {
      std::swap(p[i], p[p[i]]);
      ++swaps;
    }
  return swaps % 2 == 0;
}

// S_n as an explicit table; product g*h applies g first, then h.
inline GroupRef symmetric_group(int n) {
  int order = 1;
  for (int i = 2; i <= n; ++i) order *= i;
  std::vector<std::vector<int>> perms(order);
  for (int r = 0; r < order; ++r) perms[r] = perm_unrank(n, r);
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h) {
      std::vector<int> comp(n);
      for (int x = 0; x < n; ++x) comp[x] = perms[h][perms[g][x]];
      table[g][h] = perm_rank(comp);
    }
  return build_from_table(table, "sym:" + std::to_string(n));
}

// ---- individual cases --------------------------------------------------------

inline CaseReport case_ex21(const Limits& lim) {
  CaseReport rep{"ex2.1", "Frattini subgroup of cyclic groups: <a^m> with m the radical of n", {}, {}};
  for (int n : {4, 6, 8, 9, 12, 16, 18, 24, 27, 30}) {
    GroupRef G = build_cyclic(n);
    int m = radical_of(n);
    std::vector<int> expected;
    for (int x = 0; x < n; x += m) expected.push_back(x);
    Subgroup phi = frattini_subgroup(G, lim);
    claim(rep, "phi(cyclic:" + std::to_string(n) + ")", show_ids(expected), show_ids(phi.elements));
  }
  // for cyclic groups the relative subgroup never exceeds the Frattini subgroup
  for (int n : {6, 12, 30}) {
    GroupRef G = build_cyclic(n);
    AutGroup aut = automorphism_group(G, lim);
    auto normals = all_normal_subgroups(G, lim);
    ConnectionSet C = make_connection_set(G, {1, n - 1}, aut);
    auto lattice = invariant_normal_lattice(C, normals);
    Subgroup phi = frattini_subgroup(G, lim);
    claim(rep, "phi(cyclic:" + std::to_string(n) + ";{1,-1}) equals phi(G)", show_ids(phi.elements),
          show_ids(lattice.phi.elements));
  }
  return rep;
}

inline CaseReport case_ex22(const Limits& lim) {
  CaseReport rep{"ex2.2",
                 "Dihedral relative Frattini subgroups for C1={a,a^-1,b} and C2={b,ba}", {}, {}};
  auto rotations = [](int n, int step) {
    std::vector<int> out;
    for (int x = 0; x < n; x += step) out.push_back(x);
    return out;
  };
  for (int n : {3, 4, 5, 6, 8, 9, 12}) {
    GroupRef G = build_dihedral(n);
    AutGroup aut = automorphism_group(G, lim);
    auto normals = all_normal_subgroups(G, lim);
    claim_eq(rep, "n=" + std::to_string(n) + ": |Aut(G)| = n*phi(n)",
             static_cast<long long>(n) * euler_phi(n), aut.size());

    Subgroup phiG = frattini_subgroup(G, lim);
    claim(rep, "n=" + std::to_string(n) + ": phi(G) = <a^rad(n)>",
          show_ids(rotations(n, radical_of(n))), show_ids(phiG.elements));

    ConnectionSet C1 = make_connection_set(G, {1, n - 1, n}, aut);
    ConnectionSet C2 = make_connection_set(G, {n, n + 1}, aut);
    claim_eq(rep, "n=" + std::to_string(n) + ": |Aut(G;C1)| = 2", 2, C1.aut_gc.size());
    claim_eq(rep, "n=" + std::to_string(n) + ": |Aut(G;C2)| = 2", 2, C2.aut_gc.size());

    auto lat1 = invariant_normal_lattice(C1, normals);
    auto lat2 = invariant_normal_lattice(C2, normals);
    std::vector<int> a_full = rotations(n, 1);
    if (n % 2 == 1) {
      claim_eq(rep, "n=" + std::to_string(n) + " odd: |A_max(G;C1)| = 1", 1,
               static_cast<long long>(lat1.maximal.size()));
      claim(rep, "n=" + std::to_string(n) + " odd: phi(G;C1) = <a>", show_ids(a_full),
            show_ids(lat1.phi.elements));
    } else {
      // maximal members <a>, <a^2,b>, <a^2,ba>; intersection <a^2>
      claim_eq(rep, "n=" + std::to_string(n) + " even: |A_max(G;C1)| = 3", 3,
               static_cast<long long>(lat1.maximal.size()));
      claim(rep, "n=" + std::to_string(n) + " even: phi(G;C1) = <a^2>", show_ids(rotations(n, 2)),
            show_ids(lat1.phi.elements));
    }
    claim_eq(rep, "n=" + std::to_string(n) + ": |A_max(G;C2)| = 1", 1,
             static_cast<long long>(lat2.maximal.size()));
    claim(rep, "n=" + std::to_string(n) + ": phi(G;C2) = <a>", show_ids(a_full),
          show_ids(lat2.phi.elements));
  }
  // n odd: all n reflections form one conjugacy class; its normal C-closure from any single one
  {
    GroupRef G = build_dihedral(3);
    AutGroup aut = automorphism_group(G, lim);
    ConnectionSet C = make_connection_set(G, {3, 4}, aut);
    claim(rep, "n=3: normal C-closure of {b} is all reflections", show_ids({3, 4, 5}),
          show_ids(normal_c_closure(C, {3})));
  }
  return rep;
}

inline CaseReport case_ex23_s5(const Limits& lim) {
  CaseReport rep{"ex2.3-s5",
                 "Almost simple S5: trivial Frattini subgroup, relative subgroup A5", {}, {}};
  Limits big = lim;
  big.order_cap = std::max(big.order_cap, 120);
  GroupRef S5 = symmetric_group(5);
  claim_eq(rep, "|S5| = 120", 120, S5->order);

  Subgroup phi = frattini_subgroup(S5, big);
  claim(rep, "phi(S5) trivial", show_ids({0}), show_ids(phi.elements));

  AutGroup aut = automorphism_group(S5, big);
  claim_eq(rep, "|Aut(S5)| = 120", 120, aut.size());

  std::vector<int> a5;
  for (int r = 0; r < 120; ++r)
    if (perm_even(perm_unrank(5, r))) a5.push_back(r);
  claim_eq(rep, "|A5| = 60", 60, static_cast<long long>(a5.size()));

  auto normals = all_normal_subgroups(S5, big);
  claim_eq(rep, "normal subgroups of S5: 1, A5, S5", 3, static_cast<long long>(normals.size()));

  // sampled connection sets: the transposition class, and a transposition with a 5-cycle pair
  std::vector<std::vector<int>> samples;
  {
    std::vector<int> transpositions;
    for (int r = 0; r < 120; ++r) {
      auto p = perm_unrank(5, r);
      int moved = 0;
      for (int x = 0; x < 5; ++x) moved += p[x] != x;
      if (moved == 2) transpositions.push_back(r);
    }
    samples.push_back(transpositions);
    samples.push_back({perm_rank({1, 0, 2, 3, 4}), perm_rank({1, 2, 3, 4, 0}),
                       perm_rank({4, 0, 1, 2, 3})});
  }
  for (const auto& ids : samples) {
    ConnectionSet C = make_connection_set(S5, ids, aut);
    claim_true(rep, "C " + show_ids(ids) + " generates", is_generating(C));
    auto lattice = invariant_normal_lattice(C, normals);
    claim(rep, "phi(S5;C) = A5 for C " + show_ids(ids), show_ids(a5), show_ids(lattice.phi.elements));
    claim_true(rep, "phi(S5;C) strictly contains phi(S5)",
               lattice.phi.size() > phi.size() && subgroup_subset(phi, lattice.phi));
  }
  return rep;
}

inline CaseReport case_ex25(const Limits& lim) {
  CaseReport rep{"ex2.5",
                 "Dihedral transitive sets: pair orbits give cycles, all reflections give K_{n,n}", {}, {}};
  for (int n : {3, 4, 6, 7}) {
    GroupRef G = build_dihedral(n);
    AutGroup aut = automorphism_group(G, lim);
    for (int i : {0, 2}) {
      std::vector<int> di{n + i, n + (i + 1) % n};
      ConnectionSet C = make_connection_set(G, di, aut);
      claim_true(rep, "n=" + std::to_string(n) + ": D_" + std::to_string(i) + " is transitive",
                 is_transitive_set(C));
      claim_iso(rep, "n=" + std::to_string(n) + ": Cay(G;D_" + std::to_string(i) + ") is a 2n-cycle",
                cayley_graph(C).graph, make_cycle(2 * n), lim);
    }
    std::vector<int> all_refl;
    for (int i = 0; i < n; ++i) all_refl.push_back(n + i);
    ConnectionSet C = make_connection_set(G, all_refl, aut);
    claim_eq(rep, "n=" + std::to_string(n) + ": Aut(G;C') is all of Aut(G)", aut.size(),
             C.aut_gc.size());
    claim_true(rep, "n=" + std::to_string(n) + ": C' is transitive", is_transitive_set(C));
    claim_iso(rep, "n=" + std::to_string(n) + ": Cay(G;C') = K_{n,n}", cayley_graph(C).graph,
              make_complete_bipartite(n, n), lim);
  }
  return rep;
}

inline CaseReport case_lem31(const Limits& lim) {
  CaseReport rep{"lem3.1", "Cayley graph of a direct product is the direct product graph", {}, {}};
  GroupRef z2 = build_cyclic(2), z3 = build_cyclic(3), z4 = build_cyclic(4), z6 = build_cyclic(6);
  GroupRef d3 = build_dihedral(3);
  struct Entry {
    std::string name;
    std::vector<GroupRef> gs;
    std::vector<std::vector<int>> cs;
  };
  std::vector<Entry> entries = {
      {"Z2 x Z2", {z2, z2}, {{1}, {1}}},
      {"Z2 x Z3", {z2, z3}, {{1}, {1, 2}}},
      {"D6 x Z2", {d3, z2}, {{3, 4}, {1}}},
      {"Z6 x Z4", {z6, z4}, {{1, 5}, {1, 3}}},
      {"Z2 x Z2 x Z3", {z2, z2, z3}, {{1}, {1}, {1, 2}}},
  };
  for (const auto& e : entries)
    claim_true(rep, "product identity on " + e.name, cayley_of_product_equals_product(e.gs, e.cs, lim));
  // and the concrete small instance: K2 x C3 is a 6-cycle
  SimpleGraph prod = direct_product_graph({make_complete(2), make_cycle(3)}, lim);
  claim_iso(rep, "K2 x C3 is a 6-cycle", prod, make_cycle(6), lim);
  return rep;
}

inline CaseReport case_thm12_z6(const Limits& lim) {
  CaseReport rep{"thm1.2-z6", "Decomposition of the 6-cycle Cay(Z6;{1,5})", {}, {}};
  GroupRef G = build_cyclic(6);
  ConnectionSet C = make_connection_set(G, {1, 5}, lim);
  DecompositionReport d = decompose(cayley_graph(C), lim);
  claim_eq(rep, "phi trivial", 1, d.phi.size());
  claim_eq(rep, "k = 2 factors", 2, static_cast<long long>(d.factors.size()));
  std::vector<int> qorders;
  for (const auto& f : d.factors) qorders.push_back(f.coset_map.quotient->order);
  std::sort(qorders.begin(), qorders.end());
  claim(rep, "factor quotient orders", show_ids({2, 3}), show_ids(qorders));
  claim_iso(rep, "Cay(G/phi) is a 6-cycle", d.phi_quotient_graph.graph, make_cycle(6), lim);
  claim_eq(rep, "zeta image covers the whole product graph", d.product_graph.edge_count(),
           d.phi_quotient_graph.graph.edge_count());
  claim_true(rep, "zeta image is a full subdirect product", d.certificate.full_subdirect);
  rep.artifacts.push_back(graph6_encode(d.phi_quotient_graph.graph));
  return rep;
}

inline CaseReport case_prop43(const Limits& lim) {
  CaseReport rep{"prop4.3", "Stabilizer structures of the two known 4-valent families", {}, {}};
  using namespace dihedral;
  {
    FourValentClass cls = classify_4valent(8, talebi_a_set(8, 4));
    claim(rep, "n=8 {b,ba,ba^4,ba^5} overlaps both families", "Overlap",
          four_valent_kind_name(cls.kind));
    claim_eq(rep, "overlap i parameter", 4, cls.i_a);
    claim_eq(rep, "overlap k parameter", 3, cls.k_b);
    AutStructure st = aut_gc_structure(8, cls);
    claim(rep, "n=8 overlap stabilizer is D8", "D8", aut_structure_name(st.label));
    claim_eq(rep, "n=8 overlap stabilizer order", 8, st.order);
  }
  {
    FourValentClass cls = classify_4valent(5, talebi_b_set(5, 2));
    claim(rep, "n=5 k=2 lands in family (b)", "TalebiB", four_valent_kind_name(cls.kind));
    AutStructure st = aut_gc_structure(5, cls);
    claim(rep, "n=5 family (b) stabilizer is Z4", "Z4", aut_structure_name(st.label));
  }
  {
    claim_true(rep, "family (a) admits n=21, i=7", talebi_a_valid(21, 7));
    FourValentClass cls = classify_4valent(21, talebi_a_set(21, 7));
    claim(rep, "n=21 i=7 lands in family (a)", "TalebiA", four_valent_kind_name(cls.kind));
    AutStructure st = aut_gc_structure(21, cls);
    claim(rep, "n=21 family (a) stabilizer is Z2xZ2", "Z2xZ2", aut_structure_name(st.label));
  }
  {
    FourValentClass cls = classify_4valent(12, talebi_b_set(12, 5));
    AutStructure st = aut_gc_structure(12, cls);
    claim(rep, "n=12 k=n/2-1 stabilizer is D8", "D8", aut_structure_name(st.label));
  }
  {
    // n=4: the four reflections give K_{4,4} with the full automorphism group
    GroupRef G = build_dihedral(4);
    AutGroup aut = automorphism_group(G, lim);
    ConnectionSet C = make_connection_set(G, {4, 5, 6, 7}, aut);
    claim_iso(rep, "n=4 all reflections: Cay(D8;C) = K_{4,4}", cayley_graph(C).graph,
              make_complete_bipartite(4, 4), lim);
    claim_eq(rep, "n=4: Aut(G;C) = Aut(G) of order 8", 8, C.aut_gc.size());
    FourValentClass cls = dihedral::classify_4valent(4, {4, 5, 6, 7});
    claim(rep, "n=4 class is the overlap set", "Overlap", four_valent_kind_name(cls.kind));
  }
  return rep;
}

inline CaseReport case_prop47(const Limits& lim) {
  CaseReport rep{"prop4.7", "Infinite family instances from non-Mersenne primes", {}, {}};
  using namespace dihedral;
  struct Want {
    int p, q, n;
    NewFamilyParams params;
  };
  std::vector<Want> wants = {
      {5, 3, 30, {5, 3, 8, 11, 19}},
      {11, 3, 66, {11, 3, 14, 23, 43}},
  };
  for (const auto& w : wants) {
    MersenneFamilyInstance inst = mersenne_family(w.p, w.q);
    claim_eq(rep, "p=" + std::to_string(w.p) + ",q=" + std::to_string(w.q) + ": n", w.n, inst.n);
    claim(rep, "p=" + std::to_string(w.p) + ": parameters (i,j,k,ell,m)",
          show_ids({w.params.i, w.params.j, w.params.k, w.params.ell, w.params.m}),
          show_ids({inst.params.i, inst.params.j, inst.params.k, inst.params.ell, inst.params.m}));
    claim_true(rep, "p=" + std::to_string(w.p) + ": parameters satisfy the family conditions",
               new_family_valid(inst.n, inst.params).ok());
    FourValentClass cls = classify_4valent(inst.n, new_family_set(inst.n, inst.params));
    claim(rep, "p=" + std::to_string(w.p) + ": classifies as the new family", "NewFamily",
          four_valent_kind_name(cls.kind));
    claim_true(rep, "p=" + std::to_string(w.p) + ": no image lies in a Talebi family",
               new_family_not_talebi(inst.n, inst.params));
    (void)lim;
  }
  return rep;
}

inline CaseReport case_ex51(const Limits& lim) {
  CaseReport rep{"ex5.1",
                 "Non-edge-transitive counterexample on Z2^4: quotients exist, the product embedding fails", {}, {}};
  GroupRef G = build_elementary_abelian(2, 4);
  const int a1 = 11, a2 = 7, b1 = 10, b2 = 5, b3 = 15;  // (1,0,1,1),(0,1,1,1),(1,0,1,0),(0,1,0,1),(1,1,1,1)
  const int a12 = 12;                                   // a1+a2 = (1,1,0,0)
  std::vector<int> C{a1, a2, b1, b2, b3};

  AutGroup aut = automorphism_group(G, lim);
  claim_eq(rep, "|Aut(Z2^4)| = |GL(4,2)| = 20160", 20160, aut.size());

  ConnectionSet conn = make_connection_set(G, C, aut);
  claim_true(rep, "C generates", is_generating(conn));
  claim_eq(rep, "|Aut(G;C)| = 12", 12, conn.aut_gc.size());

  std::vector<int> orbit_sizes;
  for (const auto& o : conn.orbit_partition) orbit_sizes.push_back(static_cast<int>(o.size()));
  std::sort(orbit_sizes.begin(), orbit_sizes.end());
  claim(rep, "orbit sizes on C are {2,3}", show_ids({2, 3}), show_ids(orbit_sizes));
  {
    // S2 x S3 profile: nonabelian, exponent 6, seven involutions
    bool abelian = true;
    int involutions = 0, max_order = 1;
    for (const auto& s : conn.aut_gc.elements) {
      int o = 1;
      Automorphism x = s;
      while (x.image != identity_automorphism(G).image) {
        x = compose(x, s);
        ++o;
      }
      max_order = std::max(max_order, o);
      if (o == 2) ++involutions;
      for (const auto& t : conn.aut_gc.elements)
        if (compose(s, t).image != compose(t, s).image) abelian = false;
    }
    claim_true(rep, "Aut(G;C) is nonabelian", !abelian);
    claim_eq(rep, "Aut(G;C) maximal element order 6", 6, max_order);
    claim_eq(rep, "Aut(G;C) has 7 involutions", 7, involutions);
  }
  claim_true(rep, "C is not transitive", !is_transitive_set(conn));
  claim(rep, "normal C-closure of {a1} is {a1,a2}", show_ids({a2, a1}),
        show_ids(normal_c_closure(conn, {a1})));

  auto normals = all_normal_subgroups(G, lim);
  auto lattice = invariant_normal_lattice(conn, normals);
  Subgroup M = subgroup_generated(G, {a1, a2});
  Subgroup N = subgroup_generated(G, {b1, b2, a12});
  auto in_maximal = [&](const Subgroup& S) {
    for (const auto& X : lattice.maximal)
      if (same_elements(X, S)) return true;
    return false;
  };
  claim_true(rep, "M = <a1,a2> lies in A_max(G;C)", in_maximal(M));
  claim_true(rep, "N = <b1,b2,a1+a2> lies in A_max(G;C)", in_maximal(N));
  claim(rep, "phi(G;C) = {0, a1+a2}", show_ids({0, a12}), show_ids(lattice.phi.elements));
  claim(rep, "phi(G;C) = M n N", show_ids(intersect(M, N).elements), show_ids(lattice.phi.elements));
  claim_true(rep, "membership criterion admits a1+a2", phi_membership_oracle(conn, a12));

  CayleyGraph gamma = cayley_graph(conn);
  claim_true(rep, "Cay(G;C) is not normal edge-transitive", !is_normal_edge_transitive(gamma));

  CayleyGraph gamma_m = quotient_cayley_dropping_kernel(gamma, M, lim);
  CayleyGraph gamma_n = quotient_cayley_dropping_kernel(gamma, N, lim);
  CayleyGraph gamma_phi = quotient_cayley(gamma, lattice.phi, lim);
  claim_iso(rep, "Gamma_M = K4", gamma_m.graph, make_complete(4), lim);
  claim_iso(rep, "Gamma_N = K2", gamma_n.graph, make_complete(2), lim);
  claim_eq(rep, "Gamma_phi has 8 vertices", 8, gamma_phi.graph.vertex_count);
  claim_eq(rep, "Gamma_phi is 4-valent", 4, gamma_phi.graph.degree(0));
  {
    SimpleGraph cube(8);
    for (int u = 0; u < 8; ++u)
      for (int v = u + 1; v < 8; ++v)
        if (__builtin_popcount(u ^ v) == 1) cube.add_edge(u, v);
    claim_iso(rep, "Gamma_phi is the complement of the cube Q3", gamma_phi.graph, complement(cube), lim);
  }

  // g phi -> (gM, gN) is a group isomorphism yet not a graph embedding
  CosetMap qphi = quotient(G, lattice.phi);
  CosetMap qm = quotient(G, M);
  CosetMap qn = quotient(G, N);
  {
    bool iso = qm.quotient->order * qn.quotient->order == qphi.quotient->order;
    std::vector<char> seen(static_cast<size_t>(qm.quotient->order) * qn.quotient->order, 0);
    std::vector<int> reps(qphi.quotient->order, -1);
    for (int g = 0; g < G->order; ++g)
      if (reps[qphi.project(g)] < 0) reps[qphi.project(g)] = g;
    for (int v = 0; v < qphi.quotient->order && iso; ++v) {
      int code = qm.project(reps[v]) * qn.quotient->order + qn.project(reps[v]);
      if (seen[code]) iso = false;
      seen[code] = 1;
    }
    for (int x = 0; x < qphi.quotient->order && iso; ++x)
      for (int y = 0; y < qphi.quotient->order && iso; ++y) {
        int z = qphi.project(G->times(reps[x], reps[y]));
        iso = qm.project(G->times(reps[x], reps[y])) == qm.quotient->times(qm.project(reps[x]), qm.project(reps[y])) &&
              qn.quotient->times(qn.project(reps[x]), qn.project(reps[y])) == qn.project(G->times(reps[x], reps[y])) &&
              z == qphi.quotient->times(qphi.project(reps[x]), qphi.project(reps[y]));
      }
    claim_true(rep, "g phi -> (gM,gN) is a group isomorphism G/phi -> G/M x G/N", iso);
  }
  {
    int u = qphi.project(0), v = qphi.project(b3);
    claim_true(rep, "{0+phi, b3+phi} is an edge of Gamma_phi", gamma_phi.graph.has_edge(u, v));
    claim_true(rep, "its image projects to a loop of Gamma_N (b3 lies in N)",
               qn.project(0) == qn.project(b3));
    SimpleGraph prod = direct_product_graph({gamma_m.graph, gamma_n.graph}, lim);
    int iu = qm.project(0) * qn.quotient->order + qn.project(0);
    int iv = qm.project(b3) * qn.quotient->order + qn.project(b3);
    claim_true(rep, "the b3-type edge maps to a non-edge of Gamma_M x Gamma_N",
               !prod.has_edge(iu, iv));
  }
  rep.artifacts.push_back(graph6_encode(gamma_phi.graph));
  return rep;
}

}  // namespace caselib

// case-id order; reports are merged in this order
inline std::vector<std::string> casebook_ids() {
  return {"ex2.1", "ex2.2", "ex2.3-s5", "ex2.5", "ex5.1", "lem3.1", "prop4.3", "prop4.7", "thm1.2-z6"};
}

inline CaseReport run_case(const std::string& case_id, const Limits& lim = default_limits()) {
  using Fn = std::function<CaseReport(const Limits&)>;
  static const std::map<std::string, Fn> registry = {
      {"ex2.1", caselib::case_ex21},     {"ex2.2", caselib::case_ex22},
      {"ex2.3-s5", caselib::case_ex23_s5}, {"ex2.5", caselib::case_ex25},
      {"lem3.1", caselib::case_lem31},   {"thm1.2-z6", caselib::case_thm12_z6},
      {"prop4.3", caselib::case_prop43}, {"prop4.7", caselib::case_prop47},
      {"ex5.1", caselib::case_ex51},
  };
  auto it = registry.find(case_id);
  if (it == registry.end()) fail(errc::unknown_case, "no case registered under '" + case_id + "'");
  return it->second(lim);
}

}  // namespace netcay
