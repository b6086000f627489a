#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "netcay/automorphism.hpp"
#include "netcay/group.hpp"

namespace netcay {

// An inverse-closed subset of G\{1} with its setwise stabilizer Aut(G;C) and
// the orbit structure of C under it cached.
struct ConnectionSet {
  GroupRef parent;
  std::vector<int> elements;  // sorted
  AutGroup aut_gc;
  std::vector<std::vector<int>> orbit_partition;

  int size() const { return static_cast<int>(elements.size()); }
  bool contains(int x) const { return std::binary_search(elements.begin(), elements.end(), x); }
};

namespace detail {

inline void validate_connection_elements(const GroupRef& G, const std::vector<int>& ids) {
  if (ids.empty()) fail(errc::empty_set, "connection set must be non-empty");
  Bitset in = bitset_of(G->order, ids);
  for (int e : ids) {
    if (e <= 0 || e >= G->order) {
      if (e == 0) fail(errc::contains_identity, "connection set may not contain the identity");
      fail(errc::precondition_failed, "element id out of range");
    }
    if (!in.test(G->inverse(e)))
      fail(errc::not_inverse_closed, "element " + std::to_string(e) + " lacks its inverse");
  }
}

}  // namespace detail

inline ConnectionSet make_connection_set(const GroupRef& G, std::vector<int> ids,
                                         const AutGroup& full_aut) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  detail::validate_connection_elements(G, ids);
  AutGroup stab = setwise_stabilizer(full_aut, ids);
  auto parts = orbits(stab, ids);
  return ConnectionSet{G, std::move(ids), std::move(stab), std::move(parts)};
}

inline ConnectionSet make_connection_set(const GroupRef& G, const std::vector<int>& ids,
                                         const Limits& lim = default_limits()) {
  return make_connection_set(G, ids, automorphism_group(G, lim));
}

inline bool is_generating(const ConnectionSet& C) {
  return subgroup_generated(C.parent, C.elements).size() == C.parent->order;
}

namespace detail {

// Definition-2.2 test on a precomputed orbit partition: one orbit, or exactly
// two orbits that are mutually inverse.
inline bool transitive_orbits(const FiniteGroup& G, const std::vector<std::vector<int>>& parts) {
  if (parts.size() == 1) return true;
  if (parts.size() != 2) return false;
  std::vector<int> inv0;
  inv0.reserve(parts[0].size());
  for (int x : parts[0]) inv0.push_back(G.inverse(x));
  std::sort(inv0.begin(), inv0.end());
  return inv0 == parts[1];
}

}  // namespace detail

// Whether C is a transitive generating set (normal edge-transitivity of Cay(G;C)).
inline bool is_transitive_set(const ConnectionSet& C) {
  if (!is_generating(C)) fail(errc::not_generating, "transitivity is defined for generating sets only");
  return detail::transitive_orbits(*C.parent, C.orbit_partition);
}

// Same test without building a ConnectionSet; used by exhaustive sweeps.
inline bool is_transitive_in(const AutGroup& full_aut, const std::vector<int>& ids) {
  AutGroup stab = setwise_stabilizer(full_aut, ids);
  return detail::transitive_orbits(*full_aut.parent, orbits(stab, ids));
}

// A(G;C): proper normal Aut(G;C)-invariant subgroups (the trivial one included),
// its inclusion-maximal members, and their intersection Phi(G;C).
struct InvariantNormalLattice {
  ConnectionSet connection;
  std::vector<Subgroup> all;
  std::vector<Subgroup> maximal;
  Subgroup phi;
};

inline InvariantNormalLattice invariant_normal_lattice(const ConnectionSet& C,
                                                       const std::vector<Subgroup>& normal_subgroups) {
  std::vector<Subgroup> all;
  for (const auto& N : normal_subgroups) {
    if (N.is_whole_group()) continue;
    if (is_invariant_subgroup(N, C.aut_gc)) all.push_back(N);
  }
  std::vector<Subgroup> maximal;
  for (const auto& N : all) {
    bool covered = false;
    for (const auto& M : all)
      if (M.size() > N.size() && subgroup_subset(N, M)) {
        covered = true;
        break;
      }
    if (!covered) maximal.push_back(N);
  }
  Subgroup phi = maximal.front();
  for (size_t i = 1; i < maximal.size(); ++i) phi = intersect(phi, maximal[i]);
  return InvariantNormalLattice{C, std::move(all), std::move(maximal), std::move(phi)};
}

inline InvariantNormalLattice invariant_normal_lattice(const ConnectionSet& C,
                                                       const Limits& lim = default_limits()) {
  return invariant_normal_lattice(C, all_normal_subgroups(C.parent, lim));
}

// Orbit partition of all of G under conjugation together with Aut(G;C); the
// normal C-closure of any X is a union of these blocks.
inline std::vector<std::vector<int>> fusion_blocks(const ConnectionSet& C) {
  const auto& G = *C.parent;
  const int n = G.order;
  Bitset seen(n);
  std::vector<std::vector<int>> blocks;
  for (int x = 0; x < n; ++x) {
    if (seen.test(x)) continue;
    std::vector<int> blk{x};
    seen.set(x);
    for (size_t qi = 0; qi < blk.size(); ++qi) {
      int e = blk[qi];
      for (int g = 0; g < n; ++g) {
        int y = G.conj(e, g);
        if (!seen.test(y)) {
          seen.set(y);
          blk.push_back(y);
        }
      }
      for (const auto& s : C.aut_gc.elements) {
        int y = s.image[e];
        if (!seen.test(y)) {
          seen.set(y);
          blk.push_back(y);
        }
      }
    }
    std::sort(blk.begin(), blk.end());
    blocks.push_back(std::move(blk));
  }
  return blocks;
}

// Smallest superset of X closed under conjugation by G and under Aut(G;C).
inline std::vector<int> normal_c_closure(const ConnectionSet& C, const std::vector<int>& X) {
  auto blocks = fusion_blocks(C);
  std::vector<int> block_of(C.parent->order);
  for (size_t b = 0; b < blocks.size(); ++b)
    for (int e : blocks[b]) block_of[e] = static_cast<int>(b);
  Bitset picked(static_cast<int>(blocks.size()));
  for (int x : X) picked.set(block_of[x]);
  std::vector<int> out;
  picked.for_each([&](int b) { out.insert(out.end(), blocks[b].begin(), blocks[b].end()); });
  std::sort(out.begin(), out.end());
  return out;
}

// Removal property: X normal C-closed generating implies X \ Phi(G;C) is too.
inline bool check_removal_property(const ConnectionSet& C, const std::vector<int>& X,
                                   const Limits& lim = default_limits()) {
  std::vector<int> sorted = X;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (normal_c_closure(C, sorted) != sorted)
    fail(errc::precondition_failed, "X must be normal C-closed");
  if (subgroup_generated(C.parent, sorted).size() != C.parent->order)
    fail(errc::precondition_failed, "X must generate the group");
  auto lattice = invariant_normal_lattice(C, lim);
  Bitset phi = lattice.phi.mask();
  std::vector<int> trimmed;
  for (int x : sorted)
    if (!phi.test(x)) trimmed.push_back(x);
  return normal_c_closure(C, trimmed) == trimmed &&
         subgroup_generated(C.parent, trimmed).size() == C.parent->order;
}

namespace detail {

struct OracleTables {
  std::vector<uint32_t> block_bit;   // per element
  std::vector<uint32_t> subset_blocks;  // closure of each subset of G, as block bits
  std::vector<std::vector<int>> blocks;
};

inline OracleTables oracle_tables(const ConnectionSet& C) {
  const int n = C.parent->order;
  OracleTables t;
  t.blocks = fusion_blocks(C);
  t.block_bit.assign(n, 0);
  for (size_t b = 0; b < t.blocks.size(); ++b)
    for (int e : t.blocks[b]) t.block_bit[e] = uint32_t(1) << b;
  t.subset_blocks.assign(size_t(1) << n, 0);
  for (uint32_t s = 1; s < t.subset_blocks.size(); ++s) {
    uint32_t low = s & (~s + 1);
    t.subset_blocks[s] = t.subset_blocks[s ^ low] | t.block_bit[__builtin_ctz(low)];
  }
  return t;
}

struct GeneratesMemo {
  const GroupRef& G;
  const std::vector<std::vector<int>>& blocks;
  std::vector<int8_t> memo;

  GeneratesMemo(const GroupRef& g, const std::vector<std::vector<int>>& b)
      : G(g), blocks(b), memo(size_t(1) << b.size(), -1) {}

  bool operator()(uint32_t block_bits) {
    int8_t& m = memo[block_bits];
    if (m < 0) {
      std::vector<int> gens;
      for (size_t b = 0; b < blocks.size(); ++b)
        if (block_bits & (uint32_t(1) << b)) gens.insert(gens.end(), blocks[b].begin(), blocks[b].end());
      m = subgroup_generated(G, gens).size() == G->order ? 1 : 0;
    }
    return m == 1;
  }
};

}  // namespace detail

// Quantified membership criterion for Phi(G;C): y belongs iff for every subset
// X of G, the normal C-closure of X u {y} generating forces the closure of X
// to generate as well. Hard-guarded at |G| <= 16 (2^|G| subsets).
inline std::vector<bool> phi_membership_profile(const ConnectionSet& C) {
  const int n = C.parent->order;
  if (n > 16) fail(errc::order_cap_exceeded, "membership criterion quantifies over 2^|G| subsets; |G| <= 16 required");
  auto t = detail::oracle_tables(C);
  detail::GeneratesMemo generates(C.parent, t.blocks);
  std::vector<bool> member(n, true);
  for (int y = 0; y < n; ++y) {
    const uint32_t ybit = t.block_bit[y];
    for (uint32_t s = 0; s < t.subset_blocks.size(); ++s) {
      uint32_t with = t.subset_blocks[s] | ybit;
      if (generates(with) && !generates(t.subset_blocks[s])) {
        member[y] = false;
        break;
      }
    }
  }
  return member;
}

inline bool phi_membership_oracle(const ConnectionSet& C, int y) {
  const int n = C.parent->order;
  if (n > 16) fail(errc::order_cap_exceeded, "membership criterion quantifies over 2^|G| subsets; |G| <= 16 required");
  if (y < 0 || y >= n) fail(errc::precondition_failed, "element id out of range");
  auto t = detail::oracle_tables(C);
  detail::GeneratesMemo generates(C.parent, t.blocks);
  const uint32_t ybit = t.block_bit[y];
  for (uint32_t s = 0; s < t.subset_blocks.size(); ++s) {
    uint32_t with = t.subset_blocks[s] | ybit;
    if (generates(with) && !generates(t.subset_blocks[s])) return false;
  }
  return true;
}

// For transitive C: every coset of Phi(G;C) meets C in 0 or ell elements.
struct CosetIntersectionProfile {
  ConnectionSet connection;
  int ell = 0;
  std::vector<int> nonempty_cosets;  // quotient element ids of Phi-cosets meeting C
  CosetMap phi_map;
};

inline CosetIntersectionProfile coset_profile(const ConnectionSet& C,
                                              const Limits& lim = default_limits()) {
  if (!is_transitive_set(C)) fail(errc::not_transitive, "coset profile requires a transitive set");
  auto lattice = invariant_normal_lattice(C, lim);
  CosetMap q = quotient(C.parent, lattice.phi);
  std::vector<int> count(q.quotient->order, 0);
  for (int c : C.elements) ++count[q.project(c)];
  if (count[0] != 0)
    fail(errc::inconsistency_detected, "transitive connection set meets Phi(G;C)");
  int ell = 0;
  std::vector<int> nonempty;
  for (int i = 0; i < q.quotient->order; ++i) {
    if (count[i] == 0) continue;
    if (ell == 0) ell = count[i];
    else if (count[i] != ell)
      fail(errc::non_constant_intersection,
           "coset intersection sizes differ: " + std::to_string(ell) + " vs " + std::to_string(count[i]));
    nonempty.push_back(i);
  }
  return CosetIntersectionProfile{C, ell, std::move(nonempty), std::move(q)};
}

// Image of a connection set under an automorphism of the parent group; the
// stabilizer transports by conjugation, so no fresh Aut(G) search is needed.
inline ConnectionSet transitive_set_image(const ConnectionSet& C, const Automorphism& sigma) {
  if (sigma.parent.get() != C.parent.get())
    fail(errc::precondition_failed, "automorphism belongs to a different group");
  std::vector<int> ids = sigma.apply_set(C.elements);
  Automorphism sig_inv = inverse_of(sigma);
  std::vector<Automorphism> conj;
  conj.reserve(C.aut_gc.elements.size());
  for (const auto& tau : C.aut_gc.elements) conj.push_back(compose(compose(sig_inv, tau), sigma));
  std::sort(conj.begin(), conj.end(),
            [](const Automorphism& a, const Automorphism& b) { return a.image < b.image; });
  AutGroup stab{C.parent, std::move(conj)};
  auto parts = orbits(stab, ids);
  return ConnectionSet{C.parent, std::move(ids), std::move(stab), std::move(parts)};
}

// C x D on G x H (Lemma on products of transitive sets); requires at least one
// factor stabilizer to act transitively on its set. The guarantee is the orbit
// condition of the transitivity definition: the product stabilizer fuses C x D
// into one orbit or two mutually inverse ones. Generation of G x H can fail
// (the factors may share a common quotient), so it is reported, not required.
inline ConnectionSet product_transitive_set(const ConnectionSet& C, const ConnectionSet& D,
                                            const Limits& lim = default_limits()) {
  if (!is_generating(C) || !detail::transitive_orbits(*C.parent, C.orbit_partition))
    fail(errc::precondition_failed, "left factor is not a transitive generating set");
  if (!is_generating(D) || !detail::transitive_orbits(*D.parent, D.orbit_partition))
    fail(errc::precondition_failed, "right factor is not a transitive generating set");
  if (C.orbit_partition.size() != 1 && D.orbit_partition.size() != 1)
    fail(errc::precondition_failed,
         "at least one factor stabilizer must be transitive on its set (four orbits otherwise)");
  ProductGroup P = direct_product(C.parent, D.parent);
  const int m = D.parent->order;
  std::vector<int> ids;
  ids.reserve(C.elements.size() * D.elements.size());
  for (int c : C.elements)
    for (int d : D.elements) ids.push_back(c * m + d);
  ConnectionSet out = make_connection_set(P.group, ids, lim);
  if (!detail::transitive_orbits(*P.group, out.orbit_partition))
    fail(errc::inconsistency_detected, "product set failed the orbit condition");
  return out;
}

// ---- connection-set expression syntax -------------------------------------
// Comma-separated tokens. For dihedral-labelled groups: a^I, b.a^I, and the
// shorthand all-reflections. Raw element ids are accepted for any group.

inline std::vector<int> parse_connection_expr(const GroupRef& G, const std::string& expr) {
  auto trim = [](std::string s) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    if (a == std::string::npos) return std::string();
    return s.substr(a, b - a + 1);
  };
  int dihedral_n = -1;
  if (G->label.rfind("dihedral:", 0) == 0) dihedral_n = std::stoi(G->label.substr(9));

  std::vector<int> ids;
  size_t pos = 0;
  while (pos <= expr.size()) {
    size_t comma = expr.find(',', pos);
    std::string tok = trim(expr.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    pos = comma == std::string::npos ? expr.size() + 1 : comma + 1;
    if (tok.empty()) continue;
    if (tok == "all-reflections") {
      if (dihedral_n < 0) fail(errc::parse_error, "all-reflections is only defined for dihedral groups");
      for (int i = 0; i < dihedral_n; ++i) ids.push_back(dihedral_n + i);
      continue;
    }
    bool refl = false;
    std::string body = tok;
    if (body.rfind("b.", 0) == 0) {
      refl = true;
      body = body.substr(2);
    } else if (body == "b") {
      refl = true;
      body = "a^0";
    }
    if (body.rfind("a^", 0) == 0) {
      if (dihedral_n < 0) fail(errc::parse_error, "token '" + tok + "' requires a dihedral group");
      int e;
      try {
        e = std::stoi(body.substr(2));
      } catch (...) {
        fail(errc::parse_error, "bad exponent in token '" + tok + "'");
      }
      ids.push_back((refl ? dihedral_n : 0) + mod_norm(e, dihedral_n));
      continue;
    }
    if (refl) fail(errc::parse_error, "bad token '" + tok + "'");
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      if (v < 0 || v >= G->order) fail(errc::parse_error, "element id " + tok + " out of range");
      ids.push_back(v);
    } catch (const error&) {
      throw;
    } catch (...) {
      fail(errc::parse_error, "unrecognized token '" + tok + "'");
    }
  }
  if (ids.empty()) fail(errc::parse_error, "empty connection-set expression");
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

}  // namespace netcay
