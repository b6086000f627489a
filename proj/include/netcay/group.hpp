#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "netcay/error.hpp"
#include "netcay/limits.hpp"
#include "netcay/util.hpp"

namespace netcay {

struct FiniteGroup;
using GroupRef = std::shared_ptr<const FiniteGroup>;

// Explicit finite group on element ids 0..order-1. The identity is always id 0;
// builders relabel when the input identity differs, so subgroup equality is a
// plain list comparison.
struct FiniteGroup {
  int order = 1;
  std::vector<int> mul;  // row-major: mul[g*order + h] = g*h
  std::vector<int> inv;
  std::string label;

  int times(int a, int b) const { return mul[static_cast<size_t>(a) * order + b]; }
  int inverse(int a) const { return inv[a]; }
  int conj(int x, int g) const { return times(times(inverse(g), x), g); }  // x^g

  int element_order(int x) const {
    int o = 1;
    int y = x;
    while (y != 0) {
      y = times(y, x);
      ++o;
    }
    return o;
  }

  int centralizer_size(int x) const {
    int c = 0;
    for (int g = 0; g < order; ++g)
      if (times(g, x) == times(x, g)) ++c;
    return c;
  }

  bool is_abelian() const {
    for (int a = 0; a < order; ++a)
      for (int b = a + 1; b < order; ++b)
        if (times(a, b) != times(b, a)) return false;
    return true;
  }

  int exponent() const {
    long long e = 1;
    for (int x = 0; x < order; ++x) e = std::lcm(e, static_cast<long long>(element_order(x)));
    return static_cast<int>(e);
  }
};

struct Subgroup {
  GroupRef parent;
  std::vector<int> elements;  // strictly sorted

  int size() const { return static_cast<int>(elements.size()); }
  bool contains(int x) const { return std::binary_search(elements.begin(), elements.end(), x); }
  Bitset mask() const { return bitset_of(parent->order, elements); }
  bool is_whole_group() const { return size() == parent->order; }
  bool is_trivial() const { return size() == 1; }
};

inline bool same_elements(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }

// (size, lexicographic element list) — the canonical subgroup order used everywhere
inline bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.elements < b.elements;
}

inline bool subgroup_subset(const Subgroup& a, const Subgroup& b) {
  return std::includes(b.elements.begin(), b.elements.end(), a.elements.begin(), a.elements.end());
}

inline Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  Subgroup out{a.parent, {}};
  std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                        std::back_inserter(out.elements));
  return out;
}

namespace detail {

inline void check_group_axioms(const FiniteGroup& g) {
  const int n = g.order;
  if (n <= 0 || g.mul.size() != static_cast<size_t>(n) * n)
    fail(errc::not_a_group, "multiplication table is not square");
  for (int v : g.mul)
    if (v < 0 || v >= n) fail(errc::not_a_group, "table entry out of range");
  for (int x = 0; x < n; ++x)
    if (g.times(0, x) != x || g.times(x, 0) != x)
      fail(errc::not_a_group, "element 0 is not an identity");
  // Latin-square property
  for (int r = 0; r < n; ++r) {
    Bitset row(n), col(n);
    for (int c = 0; c < n; ++c) {
      int a = g.times(r, c);
      int b = g.times(c, r);
      if (row.test(a)) fail(errc::not_a_group, "row " + std::to_string(r) + " repeats an entry");
      if (col.test(b)) fail(errc::not_a_group, "column " + std::to_string(r) + " repeats an entry");
      row.set(a);
      col.set(b);
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.times(g.times(a, b), c) != g.times(a, g.times(b, c)))
          fail(errc::not_a_group, "associativity fails at triple (" + std::to_string(a) + "," +
                                      std::to_string(b) + "," + std::to_string(c) + ")");
}

inline void fill_inverses(FiniteGroup& g) {
  g.inv.assign(g.order, -1);
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y)
      if (g.times(x, y) == 0) {
        g.inv[x] = y;
        break;
      }
  for (int x = 0; x < g.order; ++x)
    if (g.inv[x] < 0) fail(errc::not_a_group, "element without inverse");
}

inline GroupRef finish(FiniteGroup g) {
  fill_inverses(g);
  check_group_axioms(g);
  return std::make_shared<const FiniteGroup>(std::move(g));
}

}  // namespace detail

inline GroupRef build_from_table(const std::vector<std::vector<int>>& table,
                                 const std::string& label = "table") {
  const int n = static_cast<int>(table.size());
  if (n == 0) fail(errc::not_a_group, "empty table");
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != n) fail(errc::not_a_group, "table is not square");
  for (const auto& row : table)
    for (int v : row)
      if (v < 0 || v >= n) fail(errc::not_a_group, "table entry out of range");
  // locate the identity, then relabel so it becomes id 0 (stable on the rest)
  int id = -1;
  for (int e = 0; e < n && id < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) id = e;
  }
  if (id < 0) fail(errc::not_a_group, "no identity element");
  std::vector<int> relabel(n);  // old id -> new id
  {
    int next = 1;
    for (int x = 0; x < n; ++x) relabel[x] = (x == id) ? 0 : next++;
  }
  FiniteGroup g;
  g.order = n;
  g.label = label;
  g.mul.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mul[static_cast<size_t>(relabel[a]) * n + relabel[b]] = relabel[table[a][b]];
  return detail::finish(std::move(g));
}

inline GroupRef build_cyclic(int n) {
  if (n < 1) fail(errc::bad_parameters, "cyclic order must be >= 1");
  FiniteGroup g;
  g.order = n;
  g.label = "cyclic:" + std::to_string(n);
  g.mul.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mul[static_cast<size_t>(a) * n + b] = (a + b) % n;
  return detail::finish(std::move(g));
}

// D_2n with a^n = b^2 = 1 and bab = a^-1.
// Encoding: id i = a^i for 0 <= i < n, id n+i = b*a^i. With it the automorphism
// action tau_k phi^j becomes plain arithmetic mod n.
inline GroupRef build_dihedral(int n) {
  if (n < 2) fail(errc::bad_parameters, "dihedral parameter must be >= 2");
  const int N = 2 * n;
  FiniteGroup g;
  g.order = N;
  g.label = "dihedral:" + std::to_string(n);
  g.mul.assign(static_cast<size_t>(N) * N, 0);
  auto id = [&](bool refl, int i) { return (refl ? n : 0) + mod_norm(i, n); };
  for (int x = 0; x < N; ++x) {
    bool xr = x >= n;
    int xi = xr ? x - n : x;
    for (int y = 0; y < N; ++y) {
      bool yr = y >= n;
      int yi = yr ? y - n : y;
      // (b^s a^i)(b^t a^j) = b^(s+t) a^(±i + j)
      int e;
      if (!xr && !yr) e = id(false, xi + yi);
      else if (!xr && yr) e = id(true, yi - xi);
      else if (xr && !yr) e = id(true, xi + yi);
      else e = id(false, yi - xi);
      g.mul[static_cast<size_t>(x) * N + y] = e;
    }
  }
  return detail::finish(std::move(g));
}

// Z_p^k; element id reads its coordinate vector in base p, first coordinate
// most significant.
inline GroupRef build_elementary_abelian(int p, int k) {
  if (!is_prime_int(p)) fail(errc::bad_parameters, "elemab base must be prime");
  if (k < 1) fail(errc::bad_parameters, "elemab rank must be >= 1");
  long long ord = 1;
  for (int i = 0; i < k; ++i) {
    ord *= p;
    if (ord > 1 << 20) fail(errc::bad_parameters, "elemab order too large");
  }
  const int n = static_cast<int>(ord);
  FiniteGroup g;
  g.order = n;
  g.label = "elemab:" + std::to_string(p) + "^" + std::to_string(k);
  g.mul.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int x = a, y = b, s = 0, w = 1;
      for (int i = 0; i < k; ++i) {
        s += ((x % p) + (y % p)) % p * w;
        x /= p;
        y /= p;
        w *= p;
      }
      g.mul[static_cast<size_t>(a) * n + b] = s;
    }
  return detail::finish(std::move(g));
}

inline Subgroup subgroup_generated(const GroupRef& G, const std::vector<int>& gens) {
  const int n = G->order;
  Bitset in(n);
  std::vector<int> elems;
  elems.reserve(n);
  in.set(0);
  elems.push_back(0);
  std::vector<int> gen;
  for (int s : gens)
    if (s != 0) gen.push_back(s);
  for (size_t qi = 0; qi < elems.size(); ++qi) {
    int x = elems[qi];
    for (int s : gen) {
      int y = G->times(x, s);
      if (!in.test(y)) {
        in.set(y);
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return Subgroup{G, std::move(elems)};
}

inline bool is_subgroup(const GroupRef& G, const std::vector<int>& elems) {
  if (elems.empty() || elems[0] != 0) return false;
  Bitset in = bitset_of(G->order, elems);
  for (int a : elems)
    for (int b : elems)
      if (!in.test(G->times(a, b))) return false;
  return true;
}

inline bool is_normal(const Subgroup& H) {
  const auto& G = *H.parent;
  Bitset in = H.mask();
  for (int h : H.elements)
    for (int g = 0; g < G.order; ++g)
      if (!in.test(G.conj(h, g))) return false;
  return true;
}

// classes sorted internally and listed by minimum representative
inline std::vector<std::vector<int>> conjugacy_classes(const GroupRef& G) {
  const int n = G->order;
  Bitset seen(n);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < n; ++x) {
    if (seen.test(x)) continue;
    Bitset cl(n);
    for (int g = 0; g < n; ++g) cl.set(G->conj(x, g));
    auto v = cl.to_vector();
    for (int e : v) seen.set(e);
    classes.push_back(std::move(v));
  }
  return classes;
}

namespace detail {

struct SubgroupRecord {
  std::vector<int> elements;
  std::vector<int> gens;
};

inline std::vector<Subgroup> sorted_subgroup_list(const GroupRef& G,
                                                  std::map<std::vector<uint64_t>, SubgroupRecord>& found) {
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& [mask, rec] : found) out.push_back(Subgroup{G, rec.elements});
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

}  // namespace detail

// Every normal subgroup, G included, via closures of conjugacy-class unions.
inline std::vector<Subgroup> all_normal_subgroups(const GroupRef& G,
                                                  const Limits& lim = default_limits()) {
  if (G->order > lim.order_cap)
    fail(errc::order_cap_exceeded, "normal subgroup enumeration capped at order " + std::to_string(lim.order_cap));
  auto classes = conjugacy_classes(G);
  std::map<std::vector<uint64_t>, detail::SubgroupRecord> found;
  std::vector<detail::SubgroupRecord*> queue;
  {
    detail::SubgroupRecord triv{{0}, {}};
    auto [it, fresh] = found.emplace(bitset_of(G->order, triv.elements).words(), std::move(triv));
    queue.push_back(&it->second);
  }
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    detail::SubgroupRecord cur = *queue[qi];  // copy: map may rehash? (std::map stable, but keep simple)
    Bitset in = bitset_of(G->order, cur.elements);
    for (const auto& cl : classes) {
      if (in.test(cl[0])) continue;
      std::vector<int> gens = cur.gens;
      gens.insert(gens.end(), cl.begin(), cl.end());
      Subgroup closed = subgroup_generated(G, gens);
      auto key = closed.mask().words();
      if (found.count(key)) continue;
      detail::SubgroupRecord rec{closed.elements, std::move(gens)};
      auto [it, fresh] = found.emplace(std::move(key), std::move(rec));
      queue.push_back(&it->second);
    }
  }
  return detail::sorted_subgroup_list(G, found);
}

// Every subgroup, by closing generated subgroups under element extension.
inline std::vector<Subgroup> all_subgroups(const GroupRef& G, const Limits& lim = default_limits()) {
  if (G->order > lim.order_cap)
    fail(errc::order_cap_exceeded, "subgroup enumeration capped at order " + std::to_string(lim.order_cap));
  std::map<std::vector<uint64_t>, detail::SubgroupRecord> found;
  std::vector<detail::SubgroupRecord*> queue;
  {
    detail::SubgroupRecord triv{{0}, {}};
    auto [it, fresh] = found.emplace(bitset_of(G->order, triv.elements).words(), std::move(triv));
    queue.push_back(&it->second);
  }
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    detail::SubgroupRecord cur = *queue[qi];
    Bitset in = bitset_of(G->order, cur.elements);
    for (int g = 1; g < G->order; ++g) {
      if (in.test(g)) continue;
      std::vector<int> gens = cur.gens;
      gens.push_back(g);
      Subgroup closed = subgroup_generated(G, gens);
      auto key = closed.mask().words();
      if (found.count(key)) continue;
      detail::SubgroupRecord rec{closed.elements, std::move(gens)};
      auto [it, fresh] = found.emplace(std::move(key), std::move(rec));
      queue.push_back(&it->second);
    }
  }
  return detail::sorted_subgroup_list(G, found);
}

inline std::vector<Subgroup> maximal_proper_subgroups(const GroupRef& G,
                                                      const Limits& lim = default_limits()) {
  auto subs = all_subgroups(G, lim);
  std::vector<Bitset> masks;
  masks.reserve(subs.size());
  for (const auto& s : subs) masks.push_back(s.mask());
  std::vector<Subgroup> maximal;
  for (size_t i = 0; i < subs.size(); ++i) {
    if (subs[i].is_whole_group()) continue;
    bool covered = false;
    for (size_t j = 0; j < subs.size() && !covered; ++j) {
      if (j == i || subs[j].is_whole_group()) continue;
      if (subs[j].size() > subs[i].size() && masks[j].contains_all(masks[i])) covered = true;
    }
    if (!covered) maximal.push_back(subs[i]);
  }
  return maximal;
}

// intersection of all maximal proper subgroups
inline Subgroup frattini_subgroup(const GroupRef& G, const Limits& lim = default_limits()) {
  auto maximal = maximal_proper_subgroups(G, lim);
  if (maximal.empty()) {
    // only the trivial group has no maximal proper subgroup
    std::vector<int> all(G->order);
    for (int i = 0; i < G->order; ++i) all[i] = i;
    return Subgroup{G, all};
  }
  Subgroup phi = maximal[0];
  for (size_t i = 1; i < maximal.size(); ++i) phi = intersect(phi, maximal[i]);
  return phi;
}

struct CosetMap {
  GroupRef parent;
  Subgroup kernel;
  GroupRef quotient;
  std::vector<int> projection;  // parent element id -> quotient element id

  int project(int x) const { return projection[x]; }
};

// Quotient modulo a normal subgroup. Coset ids follow the minimum-element
// representative order, so the identity coset is id 0.
inline CosetMap quotient(const GroupRef& G, const Subgroup& N) {
  if (N.parent.get() != G.get()) fail(errc::precondition_failed, "subgroup belongs to a different group");
  if (!is_normal(N)) fail(errc::not_normal, "quotient requires a normal subgroup");
  const int n = G->order;
  std::vector<int> coset_min(n, -1);
  std::vector<int> reps;
  for (int g = 0; g < n; ++g) {
    if (coset_min[g] >= 0) continue;
    for (int h : N.elements) coset_min[G->times(g, h)] = g;
    reps.push_back(g);
  }
  std::vector<int> qid(n, -1);
  for (size_t i = 0; i < reps.size(); ++i) qid[reps[i]] = static_cast<int>(i);
  const int q = static_cast<int>(reps.size());
  FiniteGroup quot;
  quot.order = q;
  quot.label = G->label + "/" + std::to_string(N.size());
  quot.mul.assign(static_cast<size_t>(q) * q, 0);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      quot.mul[static_cast<size_t>(a) * q + b] = qid[coset_min[G->times(reps[a], reps[b])]];
  GroupRef qr = detail::finish(std::move(quot));
  std::vector<int> proj(n);
  for (int g = 0; g < n; ++g) proj[g] = qid[coset_min[g]];
  return CosetMap{G, N, qr, std::move(proj)};
}

struct ProductGroup {
  GroupRef group;
  CosetMap onto_left;   // kernel {1} x H
  CosetMap onto_right;  // kernel G x {1}
};

// Pair encoding id = idG * |H| + idH.
inline ProductGroup direct_product(const GroupRef& G, const GroupRef& H) {
  const int n = G->order, m = H->order;
  if (static_cast<long long>(n) * m > 1 << 20) fail(errc::bad_parameters, "product order too large");
  const int N = n * m;
  FiniteGroup p;
  p.order = N;
  p.label = "product(" + G->label + "," + H->label + ")";
  p.mul.assign(static_cast<size_t>(N) * N, 0);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      int g = G->times(a / m, b / m);
      int h = H->times(a % m, b % m);
      p.mul[static_cast<size_t>(a) * N + b] = g * m + h;
    }
  GroupRef pr = detail::finish(std::move(p));
  std::vector<int> left_kernel(m), right_kernel(n);
  for (int h = 0; h < m; ++h) left_kernel[h] = h;          // {1} x H
  for (int g = 0; g < n; ++g) right_kernel[g] = g * m;     // G x {1}
  CosetMap onto_left = quotient(pr, Subgroup{pr, left_kernel});
  CosetMap onto_right = quotient(pr, Subgroup{pr, right_kernel});
  return ProductGroup{pr, std::move(onto_left), std::move(onto_right)};
}

}  // namespace netcay
