#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "netcay/error.hpp"
#include "netcay/group.hpp"
#include "netcay/util.hpp"

namespace netcay {

// Finite undirected simple graph as adjacency bitsets over vertex ids.
struct SimpleGraph {
  int vertex_count = 0;
  std::vector<Bitset> adjacency;

  SimpleGraph() = default;
  explicit SimpleGraph(int n) : vertex_count(n), adjacency(n, Bitset(n)) {}

  void add_edge(int u, int v) {
    if (u == v) fail(errc::precondition_failed, "no self-loops in a simple graph");
    adjacency[u].set(v);
    adjacency[v].set(u);
  }
  bool has_edge(int u, int v) const { return adjacency[u].test(v); }
  int degree(int v) const { return adjacency[v].count(); }

  int edge_count() const {
    int total = 0;
    for (const auto& row : adjacency) total += row.count();
    return total / 2;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count; ++u)
      adjacency[u].for_each([&](int v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.vertex_count == b.vertex_count && a.adjacency == b.adjacency;
  }
};

inline SimpleGraph make_cycle(int n) {
  SimpleGraph g(n);
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline SimpleGraph make_complete(int n) {
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline SimpleGraph make_complete_bipartite(int a, int b) {
  SimpleGraph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

inline SimpleGraph complement(const SimpleGraph& g) {
  SimpleGraph out(g.vertex_count);
  for (int u = 0; u < g.vertex_count; ++u)
    for (int v = u + 1; v < g.vertex_count; ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

inline bool is_connected(const SimpleGraph& g) {
  if (g.vertex_count == 0) return true;
  Bitset seen(g.vertex_count);
  std::vector<int> stack{0};
  seen.set(0);
  int visited = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    g.adjacency[u].for_each([&](int v) {
      if (!seen.test(v)) {
        seen.set(v);
        ++visited;
        stack.push_back(v);
      }
    });
  }
  return visited == g.vertex_count;
}

// ---- graph6 ----------------------------------------------------------------
// Standard byte encoding: order field N(n) (single byte for n <= 62, '~' plus
// three 6-bit bytes up to 258047), then the upper triangle column by column,
// packed 6 bits per byte, each byte offset by 63.

inline std::string graph6_encode(const SimpleGraph& g) {
  const int n = g.vertex_count;
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    fail(errc::graph_too_large, "graph6 export supports at most 258047 vertices here");
  }
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

inline SimpleGraph graph6_decode(const std::string& s) {
  size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= s.size()) fail(errc::parse_error, "truncated graph6 string");
    int v = static_cast<unsigned char>(s[pos++]) - 63;
    if (v < 0 || v > 63) fail(errc::parse_error, "invalid graph6 byte");
    return v;
  };
  int n;
  if (!s.empty() && s[0] == 126) {
    ++pos;
    n = (next() << 12) | (next() << 6) | next();
  } else {
    n = next();
  }
  SimpleGraph g(n);
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      if (nbits == 0) {
        acc = next();
        nbits = 6;
      }
      if ((acc >> (nbits - 1)) & 1) g.add_edge(u, v);
      --nbits;
    }
  return g;
}

// one "u v" pair per line, u < v, sorted
inline std::string edge_list_text(const SimpleGraph& g) {
  std::string out;
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

// ---- products --------------------------------------------------------------

// mixed-radix tuple encoding shared by group products and graph products
struct MixedRadix {
  std::vector<int> sizes;

  long long total() const {
    long long t = 1;
    for (int s : sizes) t *= s;
    return t;
  }
  std::vector<int> decode(int id) const {
    std::vector<int> coords(sizes.size());
    for (size_t i = sizes.size(); i-- > 0;) {
      coords[i] = id % sizes[i];
      id /= sizes[i];
    }
    return coords;
  }
  int encode(const std::vector<int>& coords) const {
    int id = 0;
    for (size_t i = 0; i < sizes.size(); ++i) id = id * sizes[i] + coords[i];
    return id;
  }
};

// Direct (tensor/categorical) product: tuples adjacent iff adjacent in every factor.
inline SimpleGraph direct_product_graph(const std::vector<SimpleGraph>& factors,
                                        const Limits& lim = default_limits()) {
  if (factors.empty()) fail(errc::precondition_failed, "product of an empty family");
  MixedRadix radix;
  for (const auto& f : factors) radix.sizes.push_back(f.vertex_count);
  if (radix.total() > lim.graph_cap)
    fail(errc::product_too_large, "product graph exceeds " + std::to_string(lim.graph_cap) + " vertices");
  const int n = static_cast<int>(radix.total());
  SimpleGraph g(n);
  std::vector<std::vector<int>> coords(n);
  for (int v = 0; v < n; ++v) coords[v] = radix.decode(v);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool all = true;
      for (size_t i = 0; i < factors.size() && all; ++i)
        all = factors[i].has_edge(coords[u][i], coords[v][i]);
      if (all) g.add_edge(u, v);
    }
  return g;
}

// ---- isomorphism -----------------------------------------------------------

namespace detail {

inline std::vector<int> refine_colors(const SimpleGraph& g) {
  const int n = g.vertex_count;
  std::vector<int> color(n, 0);
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nb;
      g.adjacency[v].for_each([&](int u) { nb.push_back(color[u]); });
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::map<std::vector<int>, int> ranks;
    for (int v = 0; v < n; ++v) ranks.emplace(sig[v], 0);
    int next = 0;
    for (auto& [k, r] : ranks) r = next++;
    std::vector<int> fresh(n);
    for (int v = 0; v < n; ++v) fresh[v] = ranks[sig[v]];
    if (fresh == color) break;
    color = std::move(fresh);
  }
  return color;
}

}  // namespace detail

// Witness isomorphism (vertex map) or definitive non-isomorphism, by
// backtracking over color classes from degree/neighborhood refinement.
inline std::optional<std::vector<int>> graph_isomorphic(const SimpleGraph& a, const SimpleGraph& b,
                                                        const Limits& lim = default_limits()) {
  if (a.vertex_count > lim.graph_cap || b.vertex_count > lim.graph_cap)
    fail(errc::graph_too_large, "isomorphism search capped at " + std::to_string(lim.graph_cap) + " vertices");
  if (a.vertex_count != b.vertex_count || a.edge_count() != b.edge_count()) return std::nullopt;
  const int n = a.vertex_count;
  std::vector<int> ca = detail::refine_colors(a);
  std::vector<int> cb = detail::refine_colors(b);
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  // map vertices of a in order of (color class size, color): scarce classes first
  std::vector<int> class_size(n + 1, 0);
  for (int c : ca) ++class_size[c];
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (class_size[ca[x]] != class_size[ca[y]]) return class_size[ca[x]] < class_size[ca[y]];
    if (ca[x] != ca[y]) return ca[x] < ca[y];
    return x < y;
  });
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  const auto backtrack = [&](auto&& self, int idx) -> bool {
    if (idx == n) return true;
    int u = order[idx];
    for (int v = 0; v < n; ++v) {
      if (used[v] || cb[v] != ca[u]) continue;
      bool ok = true;
      for (int j = 0; j < idx && ok; ++j) {
        int w = order[j];
        ok = a.has_edge(u, w) == b.has_edge(v, map[w]);
      }
      if (!ok) continue;
      map[u] = v;
      used[v] = 1;
      if (self(self, idx + 1)) return true;
      map[u] = -1;
      used[v] = 0;
    }
    return false;
  };
  if (!backtrack(backtrack, 0)) return std::nullopt;
  return map;
}

}  // namespace netcay
