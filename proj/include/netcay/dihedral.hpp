#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "netcay/error.hpp"
#include "netcay/limits.hpp"
#include "netcay/util.hpp"

namespace netcay {
namespace dihedral {

// Automorphism tau_k phi^j of D_2n: a^i -> a^(ik), b a^i -> b a^(ik+j).
// Element ids follow the build_dihedral encoding (a^i = i, b a^i = n+i).
struct DihedralAut {
  int n = 1;
  int k = 1;  // unit mod n
  int j = 0;

  int apply(int e) const {
    if (e < n) return mod_norm(static_cast<long long>(e) * k, n);
    return n + mod_norm(static_cast<long long>(e - n) * k + j, n);
  }

  bool is_identity() const { return k == 1 && j == 0; }

  friend bool operator==(const DihedralAut& a, const DihedralAut& b) {
    return a.n == b.n && a.k == b.k && a.j == b.j;
  }
  friend bool operator<(const DihedralAut& a, const DihedralAut& b) {
    return std::pair(a.k, a.j) < std::pair(b.k, b.j);
  }
};

// a then b
inline DihedralAut compose(const DihedralAut& a, const DihedralAut& b) {
  return DihedralAut{a.n, mod_norm(static_cast<long long>(a.k) * b.k, a.n),
                     mod_norm(static_cast<long long>(a.j) * b.k + b.j, a.n)};
}

inline std::vector<DihedralAut> all_automorphisms(int n) {
  std::vector<DihedralAut> out;
  out.reserve(static_cast<size_t>(n) * euler_phi(n));
  for (int k : units_mod(n))
    for (int j = 0; j < n; ++j) out.push_back(DihedralAut{n, k, j});
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<int> apply_to_set(const DihedralAut& s, const std::vector<int>& ids) {
  std::vector<int> out;
  out.reserve(ids.size());
  for (int e : ids) out.push_back(s.apply(e));
  std::sort(out.begin(), out.end());
  return out;
}

inline int inverse_element(int n, int e) {
  if (e < n) return mod_norm(-e, n);
  return e;  // reflections are involutions
}

inline bool is_inverse_closed(int n, const std::vector<int>& ids) {
  Bitset in = bitset_of(2 * n, ids);
  for (int e : ids)
    if (!in.test(inverse_element(n, e))) return false;
  return true;
}

// <S> = D_2n exactly when a reflection is present and the rotation exponents
// plus reflection-index differences are coprime to n.
inline bool generates(int n, const std::vector<int>& ids) {
  int g = n;
  int first_refl = -1;
  for (int e : ids) {
    if (e < n) g = std::gcd(g, e);
    else if (first_refl < 0) first_refl = e - n;
    else g = std::gcd(g, e - n - first_refl);
  }
  return first_refl >= 0 && std::gcd(g, n) == 1;
}

inline std::vector<DihedralAut> setwise_stabilizer(int n, const std::vector<int>& ids) {
  Bitset in = bitset_of(2 * n, ids);
  std::vector<DihedralAut> stab;
  for (int k : units_mod(n))
    for (int j = 0; j < n; ++j) {
      DihedralAut s{n, k, j};
      bool ok = true;
      for (int e : ids)
        if (!in.test(s.apply(e))) {
          ok = false;
          break;
        }
      if (ok) stab.push_back(s);
    }
  return stab;
}

inline std::vector<std::vector<int>> orbits_under(int n, const std::vector<DihedralAut>& auts,
                                                  const std::vector<int>& ids) {
  std::vector<int> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  Bitset seen(2 * n);
  std::vector<std::vector<int>> parts;
  for (int e : sorted) {
    if (seen.test(e)) continue;
    std::vector<int> orbit{e};
    seen.set(e);
    for (size_t qi = 0; qi < orbit.size(); ++qi)
      for (const auto& s : auts) {
        int y = s.apply(orbit[qi]);
        if (!seen.test(y)) {
          seen.set(y);
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    parts.push_back(std::move(orbit));
  }
  return parts;
}

namespace detail {

// Reflection-only sets: every element is an involution, so two mutually
// inverse orbits would coincide; transitivity means a single stabilizer orbit,
// i.e. some stabilizer element carries idx[0] to each other index.
inline bool reflections_transitive(int n, const std::vector<int>& indices) {
  const int m = static_cast<int>(indices.size());
  if (m == 1) return true;
  if (n > 64) {
    // generic-width fallback
    Bitset mask(n);
    for (int i : indices) mask.set(i);
    std::vector<char> hit(m, 0);
    hit[0] = 1;
    int remaining = m - 1;
    std::vector<int> base(m);
    for (int k : units_mod(n)) {
      for (int t = 0; t < m; ++t) base[t] = mod_norm(static_cast<long long>(indices[t]) * k, n);
      for (int j = 0; j < n; ++j) {
        bool ok = true;
        for (int t = 0; t < m && ok; ++t) {
          int v = base[t] + j;
          if (v >= n) v -= n;
          ok = mask.test(v);
        }
        if (ok) {
          int v0 = base[0] + j;
          if (v0 >= n) v0 -= n;
          for (int t = 1; t < m; ++t)
            if (!hit[t] && indices[t] == v0) {
              hit[t] = 1;
              if (--remaining == 0) return true;
            }
        }
      }
    }
    return false;
  }
  uint64_t mask = 0;
  for (int i : indices) mask |= uint64_t(1) << i;
  std::vector<char> hit(m, 0);
  hit[0] = 1;
  int remaining = m - 1;
  std::vector<int> cur(m);
  for (int k : units_mod(n)) {
    for (int t = 0; t < m; ++t) cur[t] = mod_norm(static_cast<long long>(indices[t]) * k, n);
    for (int j = 0; j < n; ++j) {
      bool ok = true;
      for (int t = 0; t < m && ok; ++t) ok = (mask >> cur[t]) & 1;
      if (ok) {
        for (int t = 1; t < m; ++t)
          if (!hit[t] && indices[t] == cur[0]) {
            hit[t] = 1;
            if (--remaining == 0) return true;
          }
      }
      for (int t = 0; t < m; ++t)
        if (++cur[t] == n) cur[t] = 0;
    }
  }
  return false;
}

}  // namespace detail

// Definition-2.2 transitivity via the (k,j) parametrization; requires a
// generating inverse-closed set.
inline bool is_transitive(int n, const std::vector<int>& ids) {
  bool reflections_only = true;
  for (int e : ids)
    if (e < n) {
      reflections_only = false;
      break;
    }
  if (reflections_only) {
    std::vector<int> indices;
    indices.reserve(ids.size());
    for (int e : ids) indices.push_back(e - n);
    std::sort(indices.begin(), indices.end());
    return detail::reflections_transitive(n, indices);
  }
  auto parts = orbits_under(n, setwise_stabilizer(n, ids), ids);
  if (parts.size() == 1) return true;
  if (parts.size() != 2) return false;
  std::vector<int> inv0;
  inv0.reserve(parts[0].size());
  for (int e : parts[0]) inv0.push_back(inverse_element(n, e));
  std::sort(inv0.begin(), inv0.end());
  return inv0 == parts[1];
}

// lexicographically least image of the set over Aut(D_2n)
inline std::vector<int> canonical_form(int n, const std::vector<int>& ids) {
  std::vector<int> best = ids;
  std::sort(best.begin(), best.end());
  for (int k : units_mod(n))
    for (int j = 0; j < n; ++j) {
      auto img = apply_to_set(DihedralAut{n, k, j}, ids);
      if (img < best) best = std::move(img);
    }
  return best;
}

// ---- structure of transitive sets (coset-union form) -----------------------

struct TransitiveSetStructure {
  int n = 0;
  int r = 0;                // A_0 meets <phi> in <phi^r>
  std::vector<int> I;       // reflection indices mod r
  long long aut_order = 0;  // |Aut(G;C)|
};

inline TransitiveSetStructure transitive_structure(int n, const std::vector<int>& ids) {
  if (!is_inverse_closed(n, ids) || !generates(n, ids))
    fail(errc::precondition_failed, "structure requires an inverse-closed generating set");
  auto stab = setwise_stabilizer(n, ids);
  {
    auto parts = orbits_under(n, stab, ids);
    bool trans = parts.size() == 1;
    if (parts.size() == 2) {
      std::vector<int> inv0;
      for (int e : parts[0]) inv0.push_back(inverse_element(n, e));
      std::sort(inv0.begin(), inv0.end());
      trans = inv0 == parts[1];
    }
    if (!trans) fail(errc::not_transitive, "set is not transitive");
  }
  // r from A_0 n <phi> = <phi^r>
  int r = n;
  for (const auto& s : stab)
    if (s.k == 1 && s.j != 0) r = std::gcd(r, s.j);
  // reflection indices, reduced mod r
  std::vector<int> I;
  for (int e : ids) {
    if (e < n) fail(errc::structure_violation, "transitive set contains a rotation");
    I.push_back((e - n) % r);
  }
  std::sort(I.begin(), I.end());
  I.erase(std::unique(I.begin(), I.end()), I.end());
  // reconstruction: C = union over I of b a^i <a^r>
  std::vector<int> rebuilt;
  for (int i : I)
    for (int t = i; t < n; t += r) rebuilt.push_back(n + t);
  std::sort(rebuilt.begin(), rebuilt.end());
  std::vector<int> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  if (rebuilt != sorted) fail(errc::structure_violation, "coset-union reconstruction failed");
  return TransitiveSetStructure{n, r, std::move(I), static_cast<long long>(stab.size())};
}

// ---- the 4-valent families --------------------------------------------------

// family (a): C = {b, ba, ba^i, ba^(1-i)}
inline bool talebi_a_valid(int n, int i) {
  if (i < 2 || i > n - 1) return false;
  if (std::gcd(2 * i - 1, n) != 1) return false;
  return (2LL * i * (i - 1)) % n == 0;
}

// family (b): C = {b, ba, ba^(k+1), ba^(k^2+k+1)}
inline bool talebi_b_valid(int n, int k) {
  if (k < 1 || k > n - 2) return false;
  if (std::gcd(k, n) != 1) return false;
  long long kk = k;
  return (1 + kk + kk * kk + kk * kk * kk) % n == 0;
}

inline std::vector<int> talebi_a_set(int n, int i) {
  std::vector<int> ids{n + 0, n + 1, n + mod_norm(i, n), n + mod_norm(1 - i, n)};
  std::sort(ids.begin(), ids.end());
  return ids;
}

inline std::vector<int> talebi_b_set(int n, int k) {
  long long kk = k;
  std::vector<int> ids{n + 0, n + 1, n + mod_norm(kk + 1, n), n + mod_norm(kk * kk + kk + 1, n)};
  std::sort(ids.begin(), ids.end());
  return ids;
}

struct NewFamilyParams {
  int i = 0, j = 0, k = 0, ell = 0, m = 0;

  friend bool operator==(const NewFamilyParams& a, const NewFamilyParams& b) {
    return a.i == b.i && a.j == b.j && a.k == b.k && a.ell == b.ell && a.m == b.m;
  }
};

struct NewFamilyCheck {
  bool range_ok = false;           // n >= 5, 1 < i,j,k < n
  bool pairwise_coprime = false;   // (i)
  bool shares_factor = false;      // (ii) gcd(x,n) > 1 for x in {i,j,k}
  bool roots_of_unity = false;     // (iii) ell^2 = m^2 = 1 (mod n)
  bool roots_nontrivial = false;   // ell, m, ell*m != 1 (mod n)
  bool k_congruences = false;      // k = j*ell + i = i*m + j (mod n)
  bool annihilators = false;       // i(ell+1) = j(m+1) = 0 (mod n)

  bool ok() const {
    return range_ok && pairwise_coprime && shares_factor && roots_of_unity && roots_nontrivial &&
           k_congruences && annihilators;
  }
};

inline NewFamilyCheck new_family_valid(int n, const NewFamilyParams& p) {
  NewFamilyCheck c;
  c.range_ok = n >= 5 && p.i > 1 && p.i < n && p.j > 1 && p.j < n && p.k > 1 && p.k < n;
  c.pairwise_coprime =
      std::gcd(p.i, p.j) == 1 && std::gcd(p.i, p.k) == 1 && std::gcd(p.j, p.k) == 1;
  c.shares_factor = std::gcd(p.i, n) > 1 && std::gcd(p.j, n) > 1 && std::gcd(p.k, n) > 1;
  auto sq1 = [&](long long x) { return (x * x) % n == 1 % n; };
  c.roots_of_unity = sq1(mod_norm(p.ell, n)) && sq1(mod_norm(p.m, n));
  c.roots_nontrivial = mod_norm(p.ell, n) != 1 % n && mod_norm(p.m, n) != 1 % n &&
                       mod_norm(static_cast<long long>(p.ell) * p.m, n) != 1 % n;
  c.k_congruences = mod_norm(static_cast<long long>(p.j) * p.ell + p.i, n) == mod_norm(p.k, n) &&
                    mod_norm(static_cast<long long>(p.i) * p.m + p.j, n) == mod_norm(p.k, n);
  c.annihilators = mod_norm(static_cast<long long>(p.i) * (p.ell + 1), n) == 0 &&
                   mod_norm(static_cast<long long>(p.j) * (p.m + 1), n) == 0;
  return c;
}

inline std::vector<int> new_family_set(int n, const NewFamilyParams& p) {
  std::vector<int> ids{n + 0, n + mod_norm(p.i, n), n + mod_norm(p.j, n), n + mod_norm(p.k, n)};
  std::sort(ids.begin(), ids.end());
  return ids;
}

inline bool is_mersenne_prime(int p) {
  if (!is_prime_int(p)) return false;
  int q = p + 1;
  return (q & (q - 1)) == 0;
}

struct MersenneFamilyInstance {
  int n = 0;
  NewFamilyParams params;
};

// n = 2pq, i = p, j = q, k = p+q, ell = 2p+1, m = n - ell; p an odd non-Mersenne
// prime, q an odd prime dividing p+1.
inline MersenneFamilyInstance mersenne_family(int p, int q) {
  if (!is_prime_int(p) || p % 2 == 0) fail(errc::bad_parameters, "p must be an odd prime");
  if (is_mersenne_prime(p)) fail(errc::bad_parameters, std::to_string(p) + " is a Mersenne prime");
  if (!is_prime_int(q) || q % 2 == 0) fail(errc::bad_parameters, "q must be an odd prime");
  if ((p + 1) % q != 0) fail(errc::bad_parameters, "q must divide p+1");
  MersenneFamilyInstance inst;
  inst.n = 2 * p * q;
  inst.params = NewFamilyParams{p, q, p + q, 2 * p + 1, inst.n - (2 * p + 1)};
  if (!new_family_valid(inst.n, inst.params).ok())
    fail(errc::inconsistency_detected, "constructed parameters fail the family conditions");
  return inst;
}

// ---- classification ----------------------------------------------------------

enum class FourValentKind { talebi_a, talebi_b, overlap, new_family, not_net };

inline const char* four_valent_kind_name(FourValentKind k) {
  switch (k) {
    case FourValentKind::talebi_a: return "TalebiA";
    case FourValentKind::talebi_b: return "TalebiB";
    case FourValentKind::overlap: return "Overlap";
    case FourValentKind::new_family: return "NewFamily";
    case FourValentKind::not_net: return "NotNET";
  }
  return "?";
}

struct FourValentClass {
  FourValentKind kind = FourValentKind::not_net;
  int i_a = -1;              // TalebiA / Overlap parameter, canonical i <= n/2
  int k_b = -1;              // TalebiB / Overlap parameter
  NewFamilyParams nf;        // NewFamily parameters
  DihedralAut sigma;         // carries the input set onto the family representative
};

namespace detail {

inline std::vector<int> square_roots_of_unity(int n) {
  std::vector<int> roots;
  for (int x = 1; x < n; ++x)
    if (static_cast<long long>(x) * x % n == 1) roots.push_back(x);
  if (n == 1) roots.push_back(0);
  return roots;
}

// reflection indices of a 4-set containing index 0, or empty if shape differs
inline std::vector<int> reflection_indices(int n, const std::vector<int>& ids) {
  std::vector<int> idx;
  for (int e : ids) {
    if (e < n) return {};
    idx.push_back(e - n);
  }
  std::sort(idx.begin(), idx.end());
  if (idx.empty() || idx[0] != 0) return {};
  return idx;
}

inline bool match_talebi_a(int n, const std::vector<int>& idx, int& i_out) {
  if (idx.size() != 4 || idx[0] != 0 || idx[1] != 1) return false;
  int x = idx[2], y = idx[3];
  if (mod_norm(x + y, n) != 1 % n) return false;
  if (!talebi_a_valid(n, x) && !talebi_a_valid(n, y)) return false;
  i_out = std::min(x, y);  // exactly i and n+1-i describe the same set; report the small one
  return true;
}

inline bool match_talebi_b(int n, const std::vector<int>& idx, int& k_out) {
  if (idx.size() != 4 || idx[0] != 0 || idx[1] != 1) return false;
  int u = idx[2], v = idx[3];
  for (auto [kk, other] : {std::pair(u - 1, v), std::pair(v - 1, u)}) {
    if (!talebi_b_valid(n, kk)) continue;
    long long w = kk;
    if (mod_norm(w * w + w + 1, n) == other) {
      k_out = kk;
      return true;
    }
  }
  return false;
}

inline bool match_new_family(int n, const std::vector<int>& idx, NewFamilyParams& out) {
  if (idx.size() != 4 || idx[0] != 0) return false;
  std::array<int, 3> rest{idx[1], idx[2], idx[3]};
  auto roots = square_roots_of_unity(n);
  bool found = false;
  NewFamilyParams best;
  std::array<int, 3> perm_idx{0, 1, 2};
  std::sort(perm_idx.begin(), perm_idx.end());
  do {
    NewFamilyParams p;
    p.i = rest[perm_idx[0]];
    p.j = rest[perm_idx[1]];
    p.k = rest[perm_idx[2]];
    for (int ell : roots)
      for (int m : roots) {
        p.ell = ell;
        p.m = m;
        if (!new_family_valid(n, p).ok()) continue;
        auto key = [](const NewFamilyParams& q) {
          return std::array<int, 5>{q.ell, q.m, q.i, q.j, q.k};
        };
        if (!found || key(p) < key(best)) {
          best = p;
          found = true;
        }
      }
  } while (std::next_permutation(perm_idx.begin(), perm_idx.end()));
  if (found) out = best;
  return found;
}

}  // namespace detail

// Classify a 4-element inverse-closed generating set of D_2n: NotNET when the
// set is not transitive, otherwise the family of the best automorphic image
// matching a template. All images are scanned and the least (family, params,
// sigma) candidate is returned, so the reported class and parameters are an
// invariant of the whole orbit, not of the chosen representative. A transitive
// set matching nothing contradicts the classification theorem and raises
// ClassificationGap.
inline FourValentClass classify_4valent(int n, const std::vector<int>& ids) {
  if (n < 3) fail(errc::precondition_failed, "classification requires n >= 3");
  std::vector<int> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() != 4) fail(errc::precondition_failed, "connection set must have 4 elements");
  for (int e : sorted)
    if (e <= 0 || e >= 2 * n)
      fail(errc::precondition_failed, "element id out of range for D_2n");
  if (!is_inverse_closed(n, sorted)) fail(errc::precondition_failed, "set must be inverse-closed");
  if (!generates(n, sorted)) fail(errc::precondition_failed, "set must generate");

  FourValentClass out;
  if (!is_transitive(n, sorted)) {
    out.kind = FourValentKind::not_net;
    out.sigma = DihedralAut{n, 1, 0};
    return out;
  }
  using Rank = std::array<int, 8>;  // kind, params..., sigma k, sigma j
  bool found = false;
  Rank best_rank{};
  for (int k : units_mod(n))
    for (int j = 0; j < n; ++j) {
      DihedralAut sigma{n, k, j};
      auto idx = detail::reflection_indices(n, apply_to_set(sigma, sorted));
      if (idx.empty()) continue;
      int ia = -1, kb = -1;
      bool a_hit = detail::match_talebi_a(n, idx, ia);
      bool b_hit = detail::match_talebi_b(n, idx, kb);
      FourValentClass cand;
      Rank rank;
      if (a_hit && b_hit) {
        cand.kind = FourValentKind::overlap;
        cand.i_a = ia;
        cand.k_b = kb;
        rank = {0, ia, kb, 0, 0, 0, k, j};
      } else if (a_hit) {
        cand.kind = FourValentKind::talebi_a;
        cand.i_a = ia;
        rank = {1, ia, 0, 0, 0, 0, k, j};
      } else if (b_hit) {
        cand.kind = FourValentKind::talebi_b;
        cand.k_b = kb;
        rank = {2, kb, 0, 0, 0, 0, k, j};
      } else {
        NewFamilyParams nf;
        if (!detail::match_new_family(n, idx, nf)) continue;
        cand.kind = FourValentKind::new_family;
        cand.nf = nf;
        rank = {3, nf.i, nf.j, nf.k, nf.ell, nf.m, k, j};
      }
      cand.sigma = sigma;
      if (!found || rank < best_rank) {
        found = true;
        best_rank = rank;
        out = cand;
      }
    }
  if (!found) fail(errc::classification_gap, "transitive 4-set matches no family template");
  return out;
}

// no automorphic image of a valid new-family set lies in either Talebi family
inline bool new_family_not_talebi(int n, const NewFamilyParams& p) {
  if (!new_family_valid(n, p).ok())
    fail(errc::precondition_failed, "parameters do not satisfy the family conditions");
  auto ids = new_family_set(n, p);
  for (int k : units_mod(n))
    for (int j = 0; j < n; ++j) {
      auto idx = detail::reflection_indices(n, apply_to_set(DihedralAut{n, k, j}, ids));
      if (idx.empty()) continue;
      int dummy;
      if (detail::match_talebi_a(n, idx, dummy) || detail::match_talebi_b(n, idx, dummy))
        fail(errc::inconsistency_detected, "new-family set is automorphic to a Talebi set");
    }
  return true;
}

// ---- predicted stabilizer structure ------------------------------------------

enum class AutStructureLabel { d8, z2xz2, z4 };

inline const char* aut_structure_name(AutStructureLabel l) {
  switch (l) {
    case AutStructureLabel::d8: return "D8";
    case AutStructureLabel::z2xz2: return "Z2xZ2";
    case AutStructureLabel::z4: return "Z4";
  }
  return "?";
}

struct AutStructure {
  AutStructureLabel label;
  std::vector<DihedralAut> generators;
  long long order = 0;
};

namespace detail {

inline std::vector<DihedralAut> closure(int n, std::vector<DihedralAut> gens) {
  std::vector<DihedralAut> elems{DihedralAut{n, 1, 0}};
  auto contains = [&](const DihedralAut& s) {
    return std::find(elems.begin(), elems.end(), s) != elems.end();
  };
  for (size_t qi = 0; qi < elems.size(); ++qi)
    for (const auto& g : gens) {
      DihedralAut s = compose(elems[qi], g);
      if (!contains(s)) elems.push_back(s);
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

inline AutStructureLabel label_of(const std::vector<DihedralAut>& elems) {
  const int order = static_cast<int>(elems.size());
  auto aut_order = [&](DihedralAut s) {
    int o = 1;
    DihedralAut x = s;
    while (!x.is_identity()) {
      x = compose(x, s);
      ++o;
    }
    return o;
  };
  bool abelian = true;
  for (size_t a = 0; a < elems.size() && abelian; ++a)
    for (size_t b = a + 1; b < elems.size() && abelian; ++b)
      abelian = compose(elems[a], elems[b]) == compose(elems[b], elems[a]);
  if (order == 4 && abelian) {
    int max_ord = 1;
    for (const auto& s : elems) max_ord = std::max(max_ord, aut_order(s));
    return max_ord == 2 ? AutStructureLabel::z2xz2 : AutStructureLabel::z4;
  }
  if (order == 8 && !abelian) {
    int invol = 0;
    for (const auto& s : elems)
      if (!s.is_identity() && aut_order(s) == 2) ++invol;
    if (invol == 5) return AutStructureLabel::d8;
  }
  fail(errc::mismatch_with_brute_force, "stabilizer has unexpected structure (order " +
                                            std::to_string(order) + ")");
}

}  // namespace detail

// Predicted Aut(G;C) structure of a validated family member, with generator
// pairs; always cross-checked against the brute-force setwise stabilizer.
inline AutStructure aut_gc_structure(int n, const FourValentClass& cls) {
  AutStructure out;
  std::vector<int> ids;
  switch (cls.kind) {
    case FourValentKind::talebi_a: {
      ids = talebi_a_set(n, cls.i_a);
      if (n % 4 == 0 && (cls.i_a == n / 2 || cls.i_a == n / 2 + 1)) {
        out.label = AutStructureLabel::d8;
        out.generators = {DihedralAut{n, n / 2 + 1, 0}, DihedralAut{n, n - 1, 1}};
      } else {
        out.label = AutStructureLabel::z2xz2;
        out.generators = {DihedralAut{n, n - 1, 1},
                          DihedralAut{n, mod_norm(2 * cls.i_a - 1, n), mod_norm(1 - cls.i_a, n)}};
      }
      break;
    }
    case FourValentKind::talebi_b: {
      ids = talebi_b_set(n, cls.k_b);
      if (n % 4 == 0 && cls.k_b == n / 2 - 1) {
        out.label = AutStructureLabel::d8;
        out.generators = {DihedralAut{n, n / 2 + 1, 0}, DihedralAut{n, n / 2 - 1, 1}};
      } else {
        out.label = AutStructureLabel::z4;
        out.generators = {DihedralAut{n, cls.k_b, 1}};
      }
      break;
    }
    case FourValentKind::overlap: {
      ids = talebi_a_set(n, cls.i_a);
      out.label = AutStructureLabel::d8;
      out.generators = {DihedralAut{n, n / 2 + 1, 0}, DihedralAut{n, n - 1, 1}};
      break;
    }
    case FourValentKind::new_family: {
      ids = new_family_set(n, cls.nf);
      out.label = AutStructureLabel::z2xz2;
      out.generators = {DihedralAut{n, mod_norm(cls.nf.ell, n), mod_norm(cls.nf.i, n)},
                        DihedralAut{n, mod_norm(cls.nf.m, n), mod_norm(cls.nf.j, n)}};
      break;
    }
    case FourValentKind::not_net:
      fail(errc::precondition_failed, "no stabilizer structure for a non-transitive set");
  }
  auto stab = setwise_stabilizer(n, ids);
  out.order = static_cast<long long>(stab.size());
  if (detail::label_of(stab) != out.label)
    fail(errc::mismatch_with_brute_force, "predicted label disagrees with the stabilizer");
  auto generated = detail::closure(n, out.generators);
  if (generated != stab)
    fail(errc::mismatch_with_brute_force, "asserted generators do not generate the stabilizer");
  return out;
}

// ---- enumeration --------------------------------------------------------------

// All inverse-closed 4-element subsets of D_2n \ {1}: four reflections, two
// rotation inverse-pairs, one pair plus two reflections; when include_central
// is set, the shapes through the central involution a^(n/2) join in as well
// (they never turn out transitive, and the flag exists to verify exactly that).
template <typename F>
inline void for_each_inverse_closed_4set(int n, bool include_central, F f) {
  std::vector<int> refl(n);
  for (int i = 0; i < n; ++i) refl[i] = n + i;
  std::vector<std::pair<int, int>> pairs;  // {a^x, a^-x}, x != n-x
  for (int x = 1; 2 * x < n; ++x) pairs.emplace_back(x, n - x);
  const int central = (n % 2 == 0) ? n / 2 : -1;

  // four reflections
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) f(std::vector<int>{refl[a], refl[b], refl[c], refl[d]});
  // two rotation pairs
  for (size_t p = 0; p < pairs.size(); ++p)
    for (size_t q = p + 1; q < pairs.size(); ++q)
      f(std::vector<int>{pairs[p].first, pairs[q].first, pairs[q].second, pairs[p].second});
  // one rotation pair + two reflections
  for (const auto& pr : pairs)
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) f(std::vector<int>{pr.first, pr.second, refl[a], refl[b]});
  if (include_central && central > 0) {
    // central involution + three reflections
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) f(std::vector<int>{central, refl[a], refl[b], refl[c]});
    // central involution + one reflection + one rotation pair
    for (const auto& pr : pairs)
      for (int a = 0; a < n; ++a) f(std::vector<int>{pr.first, central, pr.second, refl[a]});
  }
}

struct FourValentOrbit {
  std::vector<int> canonical;  // lexicographically least image over Aut(G)
  FourValentClass cls;
};

// One entry per Aut(G)-orbit of transitive 4-element inverse-closed generating
// sets. full_scan includes the central-involution shapes in the sweep.
inline std::vector<FourValentOrbit> enumerate_4valent(int n, const Limits& lim = default_limits(),
                                                      bool full_scan = false) {
  if (n < 3) fail(errc::precondition_failed, "enumeration requires n >= 3");
  if (n > lim.dihedral_enum_cap)
    fail(errc::cap_exceeded, "enumeration capped at n = " + std::to_string(lim.dihedral_enum_cap));
  std::vector<std::vector<int>> canon_seen;
  std::vector<FourValentOrbit> out;
  for_each_inverse_closed_4set(n, full_scan, [&](std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    if (!generates(n, ids)) return;
    if (!is_transitive(n, ids)) return;
    auto canon = canonical_form(n, ids);
    if (std::find(canon_seen.begin(), canon_seen.end(), canon) != canon_seen.end()) return;
    canon_seen.push_back(canon);
    FourValentOrbit orbit;
    orbit.cls = classify_4valent(n, canon);
    orbit.canonical = std::move(canon);
    out.push_back(std::move(orbit));
  });
  std::sort(out.begin(), out.end(),
            [](const FourValentOrbit& a, const FourValentOrbit& b) { return a.canonical < b.canonical; });
  return out;
}

}  // namespace dihedral
}  // namespace netcay
