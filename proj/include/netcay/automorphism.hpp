#pragma once

#include <algorithm>
#include <vector>

#include "netcay/group.hpp"

namespace netcay {

// A multiplication-preserving permutation of the element ids, fixing id 0.
struct Automorphism {
  GroupRef parent;
  std::vector<int> image;  // element id -> element id

  int operator()(int x) const { return image[x]; }

  std::vector<int> apply_set(const std::vector<int>& ids) const {
    std::vector<int> out;
    out.reserve(ids.size());
    for (int x : ids) out.push_back(image[x]);
    std::sort(out.begin(), out.end());
    return out;
  }
};

inline Automorphism identity_automorphism(const GroupRef& G) {
  std::vector<int> img(G->order);
  for (int i = 0; i < G->order; ++i) img[i] = i;
  return Automorphism{G, std::move(img)};
}

// a then b: x^(ab) = (x^a)^b
inline Automorphism compose(const Automorphism& a, const Automorphism& b) {
  std::vector<int> img(a.image.size());
  for (size_t x = 0; x < img.size(); ++x) img[x] = b.image[a.image[x]];
  return Automorphism{a.parent, std::move(img)};
}

inline Automorphism inverse_of(const Automorphism& a) {
  std::vector<int> img(a.image.size());
  for (size_t x = 0; x < img.size(); ++x) img[a.image[x]] = static_cast<int>(x);
  return Automorphism{a.parent, std::move(img)};
}

inline bool is_automorphism(const GroupRef& G, const std::vector<int>& image) {
  const int n = G->order;
  if (static_cast<int>(image.size()) != n || image[0] != 0) return false;
  Bitset seen(n);
  for (int v : image) {
    if (v < 0 || v >= n || seen.test(v)) return false;
    seen.set(v);
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (image[G->times(x, y)] != G->times(image[x], image[y])) return false;
  return true;
}

// Explicit list of automorphisms, sorted lexicographically by image table.
struct AutGroup {
  GroupRef parent;
  std::vector<Automorphism> elements;

  int size() const { return static_cast<int>(elements.size()); }
};

namespace detail {

// Backtracking extender: defining img[g] = h, close the partial map under
// products with everything already defined. Fails on any multiplication
// mismatch or injectivity clash. trail records definitions for rollback.
struct AutSearch {
  const FiniteGroup& G;
  std::vector<int> img;
  std::vector<char> used;
  std::vector<int> defined;

  explicit AutSearch(const FiniteGroup& g) : G(g), img(g.order, -1), used(g.order, 0) {
    img[0] = 0;
    used[0] = 1;
    defined.push_back(0);
  }

  bool extend(int g, int h, int& trail_mark) {
    trail_mark = static_cast<int>(defined.size());
    size_t qi = defined.size();
    if (!define(g, h)) return false;
    while (qi < defined.size()) {
      int x = defined[qi++];
      for (size_t di = 0; di < defined.size(); ++di) {
        int y = defined[di];
        if (!define(G.times(x, y), G.times(img[x], img[y]))) return false;
        if (!define(G.times(y, x), G.times(img[y], img[x]))) return false;
      }
    }
    return true;
  }

  void rollback(int trail_mark) {
    while (static_cast<int>(defined.size()) > trail_mark) {
      int x = defined.back();
      defined.pop_back();
      used[img[x]] = 0;
      img[x] = -1;
    }
  }

 private:
  bool define(int x, int y) {
    if (img[x] != -1) return img[x] == y;
    if (used[y]) return false;
    img[x] = y;
    used[y] = 1;
    defined.push_back(x);
    return true;
  }
};

}  // namespace detail

// Full automorphism group by backtracking over images of a short generating
// sequence, pruning on element order and centralizer size.
inline AutGroup automorphism_group(const GroupRef& G, const Limits& lim = default_limits()) {
  const int n = G->order;
  if (n > lim.order_cap)
    fail(errc::order_cap_exceeded, "automorphism search capped at order " + std::to_string(lim.order_cap));

  std::vector<int> ord(n), cent(n);
  for (int x = 0; x < n; ++x) {
    ord[x] = G->element_order(x);
    cent[x] = G->centralizer_size(x);
  }

  // greedy generating sequence: repeatedly take the least element outside the closure
  std::vector<int> gens;
  {
    Subgroup H = subgroup_generated(G, gens);
    while (H.size() < n) {
      int g = 0;
      while (H.contains(g)) ++g;
      gens.push_back(g);
      H = subgroup_generated(G, gens);
    }
  }

  std::vector<Automorphism> found;
  detail::AutSearch search(*G);

  // candidate images per generator, filtered by order/centralizer profile
  std::vector<std::vector<int>> candidates(gens.size());
  for (size_t gi = 0; gi < gens.size(); ++gi)
    for (int h = 1; h < n; ++h)
      if (ord[h] == ord[gens[gi]] && cent[h] == cent[gens[gi]]) candidates[gi].push_back(h);

  const auto recurse = [&](auto&& self, size_t gi) -> void {
    if (gi == gens.size()) {
      if (static_cast<long long>(found.size() + 1) * n > lim.aut_entry_cap)
        fail(errc::aut_too_large,
             "explicit automorphism list exceeds " + std::to_string(lim.aut_entry_cap) + " entries");
      found.push_back(Automorphism{G, search.img});
      return;
    }
    for (int h : candidates[gi]) {
      int mark = 0;
      if (search.extend(gens[gi], h, mark))
        self(self, gi + 1);
      search.rollback(mark);
    }
  };
  recurse(recurse, 0);

  std::sort(found.begin(), found.end(),
            [](const Automorphism& a, const Automorphism& b) { return a.image < b.image; });
  return AutGroup{G, std::move(found)};
}

// { sigma in A : C^sigma = C }
inline AutGroup setwise_stabilizer(const AutGroup& A, const std::vector<int>& ids) {
  Bitset in = bitset_of(A.parent->order, ids);
  std::vector<Automorphism> keep;
  for (const auto& s : A.elements) {
    bool ok = true;
    for (int e : ids)
      if (!in.test(s.image[e])) {
        ok = false;
        break;
      }
    if (ok) keep.push_back(s);
  }
  return AutGroup{A.parent, std::move(keep)};
}

// Orbit partition of an A-invariant set; orbits sorted, listed by minimum.
inline std::vector<std::vector<int>> orbits(const AutGroup& A, const std::vector<int>& ids) {
  Bitset in = bitset_of(A.parent->order, ids);
  for (const auto& s : A.elements)
    for (int e : ids)
      if (!in.test(s.image[e]))
        fail(errc::not_invariant, "set is not invariant under the given automorphisms");
  std::vector<std::vector<int>> parts;
  Bitset seen(A.parent->order);
  std::vector<int> sorted_ids = ids;
  std::sort(sorted_ids.begin(), sorted_ids.end());
  for (int e : sorted_ids) {
    if (seen.test(e)) continue;
    std::vector<int> orbit{e};
    seen.set(e);
    for (size_t qi = 0; qi < orbit.size(); ++qi)
      for (const auto& s : A.elements) {
        int y = s.image[orbit[qi]];
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

inline bool is_invariant_subgroup(const Subgroup& H, const AutGroup& A) {
  Bitset in = H.mask();
  for (const auto& s : A.elements)
    for (int h : H.elements)
      if (!in.test(s.image[h])) return false;
  return true;
}

// Characteristic simplicity: the only Aut(G)-invariant normal subgroups are 1 and G.
inline bool is_characteristically_simple(const GroupRef& G, const Limits& lim = default_limits()) {
  AutGroup A = automorphism_group(G, lim);
  for (const auto& N : all_normal_subgroups(G, lim)) {
    if (N.is_trivial() || N.is_whole_group()) continue;
    if (is_invariant_subgroup(N, A)) return false;
  }
  return true;
}

}  // namespace netcay
