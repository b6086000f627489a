#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "netcay/frattini.hpp"
#include "netcay/graph.hpp"

namespace netcay {

// Cay(G;C): vertex id = element id, {g,h} an edge iff g h^-1 in C.
struct CayleyGraph {
  GroupRef group;
  ConnectionSet connection;
  SimpleGraph graph;
};

// graph only, no stabilizer machinery; the workhorse for exhaustive sweeps
inline SimpleGraph cayley_graph_raw(const GroupRef& G, const std::vector<int>& ids) {
  SimpleGraph g(G->order);
  for (int h = 0; h < G->order; ++h)
    for (int c : ids) g.adjacency[h].set(G->times(c, h));
  for (int v = 0; v < G->order; ++v)
    if (g.adjacency[v].test(v)) fail(errc::contains_identity, "connection set contains the identity");
  return g;
}

inline CayleyGraph cayley_graph(const ConnectionSet& C) {
  return CayleyGraph{C.parent, C, cayley_graph_raw(C.parent, C.elements)};
}

inline bool is_normal_edge_transitive(const CayleyGraph& gamma) {
  if (!is_generating(gamma.connection))
    fail(errc::not_connected, "normal edge-transitivity is defined for connected Cayley graphs");
  return is_transitive_set(gamma.connection);
}

namespace detail {

inline void require_in_lattice(const CayleyGraph& gamma, const Subgroup& N) {
  if (N.parent.get() != gamma.group.get())
    fail(errc::precondition_failed, "subgroup belongs to a different group");
  if (N.is_whole_group() || !is_normal(N) || !is_invariant_subgroup(N, gamma.connection.aut_gc))
    fail(errc::not_in_lattice, "subgroup is not a proper normal Aut(G;C)-invariant subgroup");
}

}  // namespace detail

// Cay(G/N; CN/N) for N in A(G;C). Requires C n N to be empty (automatic for
// transitive C): otherwise the quotient connection set would contain the
// identity coset, and no quotient semantics is defined for that case.
inline CayleyGraph quotient_cayley(const CayleyGraph& gamma, const Subgroup& N,
                                   const Limits& lim = default_limits()) {
  detail::require_in_lattice(gamma, N);
  for (int c : gamma.connection.elements)
    if (N.contains(c))
      fail(errc::connection_meets_kernel, "connection set meets the kernel; quotient refused");
  CosetMap q = quotient(gamma.group, N);
  std::vector<int> qids;
  for (int c : gamma.connection.elements) qids.push_back(q.project(c));
  ConnectionSet qc = make_connection_set(q.quotient, qids, lim);
  return cayley_graph(qc);
}

// Quotient with the identity cosets dropped from the connection set; the
// convention used when studying quotients of non-transitive sets, where C may
// meet the kernel.
inline CayleyGraph quotient_cayley_dropping_kernel(const CayleyGraph& gamma, const Subgroup& N,
                                                   const Limits& lim = default_limits()) {
  detail::require_in_lattice(gamma, N);
  CosetMap q = quotient(gamma.group, N);
  std::vector<int> qids;
  for (int c : gamma.connection.elements)
    if (!N.contains(c)) qids.push_back(q.project(c));
  ConnectionSet qc = make_connection_set(q.quotient, qids, lim);
  return cayley_graph(qc);
}

// Cay(prod G_i, prod C_i) coincides with the direct product of the Cay(G_i, C_i),
// under the shared tuple encoding. Returns the result of checking that identity.
inline bool cayley_of_product_equals_product(const std::vector<GroupRef>& groups,
                                             const std::vector<std::vector<int>>& sets,
                                             const Limits& lim = default_limits()) {
  if (groups.empty() || groups.size() != sets.size())
    fail(errc::precondition_failed, "need one connection set per factor group");
  long long total = 1;
  for (const auto& g : groups) total *= g->order;
  if (total > lim.graph_cap)
    fail(errc::product_too_large, "product exceeds " + std::to_string(lim.graph_cap) + " vertices");

  GroupRef P = groups[0];
  std::vector<int> pset = sets[0];
  for (size_t i = 1; i < groups.size(); ++i) {
    ProductGroup prod = direct_product(P, groups[i]);
    std::vector<int> next;
    next.reserve(pset.size() * sets[i].size());
    for (int c : pset)
      for (int d : sets[i]) next.push_back(c * groups[i]->order + d);
    P = prod.group;
    pset = std::move(next);
  }
  SimpleGraph lhs = cayley_graph_raw(P, pset);

  std::vector<SimpleGraph> factors;
  factors.reserve(groups.size());
  for (size_t i = 0; i < groups.size(); ++i) factors.push_back(cayley_graph_raw(groups[i], sets[i]));
  SimpleGraph rhs = direct_product_graph(factors, lim);
  return lhs == rhs;
}

// ---- subdirect products ------------------------------------------------------

struct EdgeWitness {
  std::pair<int, int> factor_edge;    // edge of the factor
  std::pair<int, int> preimage_edge;  // an edge of the subgraph projecting onto it
};

struct SubdirectCertificate {
  bool full_subdirect = false;
  int failing_factor = -1;
  std::string failure;
  std::vector<std::vector<EdgeWitness>> witnesses;  // per factor
};

// Check a subgraph of a product (vertex list, edge list in product ids) projects
// vertex- and edge-surjectively onto every factor.
inline SubdirectCertificate is_full_subdirect(const std::vector<SimpleGraph>& factors,
                                              const std::vector<int>& sub_vertices,
                                              const std::vector<std::pair<int, int>>& sub_edges) {
  MixedRadix radix;
  for (const auto& f : factors) radix.sizes.push_back(f.vertex_count);
  SubdirectCertificate cert;
  cert.witnesses.resize(factors.size());
  for (size_t i = 0; i < factors.size(); ++i) {
    Bitset hit(factors[i].vertex_count);
    for (int v : sub_vertices) hit.set(radix.decode(v)[i]);
    if (hit.count() != factors[i].vertex_count) {
      cert.failing_factor = static_cast<int>(i);
      cert.failure = "projection onto factor " + std::to_string(i) + " is not vertex-surjective";
      return cert;
    }
    for (auto [x, y] : factors[i].edges()) {
      bool found = false;
      for (auto [u, v] : sub_edges) {
        int pu = radix.decode(u)[i], pv = radix.decode(v)[i];
        if ((pu == x && pv == y) || (pu == y && pv == x)) {
          cert.witnesses[i].push_back(EdgeWitness{{x, y}, {u, v}});
          found = true;
          break;
        }
      }
      if (!found) {
        cert.failing_factor = static_cast<int>(i);
        cert.failure = "edge {" + std::to_string(x) + "," + std::to_string(y) + "} of factor " +
                       std::to_string(i) + " has no preimage edge";
        cert.witnesses.assign(factors.size(), {});
        return cert;
      }
    }
  }
  cert.full_subdirect = true;
  return cert;
}

// Vertex-subset form: the subgraph is the one induced inside the product.
inline SubdirectCertificate is_full_subdirect(const std::vector<SimpleGraph>& factors,
                                              const std::vector<int>& sub_vertices,
                                              const Limits& lim = default_limits()) {
  MixedRadix radix;
  for (const auto& f : factors) radix.sizes.push_back(f.vertex_count);
  if (radix.total() > lim.graph_cap)
    fail(errc::product_too_large, "product exceeds " + std::to_string(lim.graph_cap) + " vertices");
  std::vector<std::pair<int, int>> edges;
  for (size_t a = 0; a < sub_vertices.size(); ++a)
    for (size_t b = a + 1; b < sub_vertices.size(); ++b) {
      auto cu = radix.decode(sub_vertices[a]);
      auto cv = radix.decode(sub_vertices[b]);
      bool adj = true;
      for (size_t i = 0; i < factors.size() && adj; ++i) adj = factors[i].has_edge(cu[i], cv[i]);
      if (adj) edges.emplace_back(sub_vertices[a], sub_vertices[b]);
    }
  return is_full_subdirect(factors, sub_vertices, edges);
}

// ---- decomposition onto a full subdirect product ------------------------------

struct VertexMap {
  std::vector<int> map;  // source vertex id -> target vertex id
};

struct DecompositionFactor {
  Subgroup kernel;          // N_i in A_max(G;C)
  CosetMap coset_map;       // G -> G/N_i
  CayleyGraph quotient_graph;
};

struct DecompositionReport {
  CayleyGraph input;
  Subgroup phi;
  CosetMap phi_map;
  CayleyGraph phi_quotient_graph;             // Cay(G/Phi, C Phi/Phi)
  std::vector<DecompositionFactor> factors;   // N_1..N_k
  SimpleGraph product_graph;                  // prod of the factor quotient graphs
  VertexMap zeta;                             // Cay(G/Phi) vertices -> product vertices
  SubdirectCertificate certificate;           // full-subdirect witnesses of the zeta image
};

namespace detail {

inline void verify_group_isomorphism_zeta(const DecompositionReport& rep) {
  const auto& q = *rep.phi_map.quotient;
  const int n = q.order;
  std::vector<char> seen(rep.product_graph.vertex_count, 0);
  MixedRadix radix;
  for (const auto& f : rep.factors) radix.sizes.push_back(f.coset_map.quotient->order);
  if (radix.total() != n)
    fail(errc::inconsistency_detected, "index product does not match |G/Phi|");
  for (int v : rep.zeta.map) {
    if (seen[v]) fail(errc::inconsistency_detected, "zeta is not injective");
    seen[v] = 1;
  }
  // homomorphism, coordinatewise
  const auto& G = *rep.input.group;
  std::vector<int> rep_of(n, -1);  // a parent representative per Phi-coset
  for (int g = 0; g < G.order; ++g)
    if (rep_of[rep.phi_map.project(g)] < 0) rep_of[rep.phi_map.project(g)] = g;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int prod = rep.phi_map.project(G.times(rep_of[a], rep_of[b]));
      auto ca = radix.decode(rep.zeta.map[a]);
      auto cb = radix.decode(rep.zeta.map[b]);
      std::vector<int> cc(rep.factors.size());
      for (size_t i = 0; i < rep.factors.size(); ++i)
        cc[i] = rep.factors[i].coset_map.quotient->times(ca[i], cb[i]);
      if (radix.encode(cc) != rep.zeta.map[prod])
        fail(errc::inconsistency_detected, "zeta is not a homomorphism");
    }
}

}  // namespace detail

// Decompose a connected normal edge-transitive Cayley graph: find the smallest
// family N_1..N_k in A_max(G;C) with intersection Phi(G;C) and index product
// |G : Phi|, then certify that g Phi -> (g N_1, ..., g N_k) carries
// Cay(G/Phi, C Phi/Phi) onto a full subdirect product of the quotient graphs,
// each of which has a characteristically simple group and trivial lattice.
inline DecompositionReport decompose(const CayleyGraph& gamma, const Limits& lim = default_limits()) {
  if (!is_generating(gamma.connection))
    fail(errc::not_connected, "decomposition requires a connected Cayley graph");
  if (!is_transitive_set(gamma.connection))
    fail(errc::not_normal_edge_transitive, "decomposition requires a normal edge-transitive Cayley graph");
  const GroupRef& G = gamma.group;
  auto lattice = invariant_normal_lattice(gamma.connection, lim);
  const auto& amax = lattice.maximal;
  const Subgroup& phi = lattice.phi;
  const long long target_index = G->order / phi.size();

  std::vector<Bitset> masks;
  for (const auto& N : amax) masks.push_back(N.mask());
  Bitset phimask = phi.mask();

  // smallest family first, then lexicographically over the sorted A_max list
  std::vector<int> chosen;
  {
    const int m = static_cast<int>(amax.size());
    std::vector<int> combo;
    const auto try_size = [&](auto&& self, int k, int start) -> bool {
      if (static_cast<int>(combo.size()) == k) {
        Bitset inter(G->order);
        for (int i = 0; i < G->order; ++i) inter.set(i);
        long long index_product = 1;
        for (int idx : combo) {
          inter &= masks[idx];
          index_product *= G->order / amax[idx].size();
          if (index_product > target_index) return false;
        }
        if (inter == phimask && index_product == target_index) {
          chosen = combo;
          return true;
        }
        return false;
      }
      for (int i = start; i < m; ++i) {
        combo.push_back(i);
        if (self(self, k, i + 1)) return true;
        combo.pop_back();
      }
      return false;
    };
    bool ok = false;
    for (int k = 1; k <= m && !ok; ++k) ok = try_size(try_size, k, 0);
    if (!ok) fail(errc::inconsistency_detected, "no family of maximal members intersects to Phi");
  }

  DecompositionReport rep{gamma, phi, quotient(G, phi), {}, {}, {}, {}, {}};

  // quotient of the input modulo Phi
  {
    for (int c : gamma.connection.elements)
      if (phimask.test(c)) fail(errc::inconsistency_detected, "transitive connection set meets Phi");
    std::vector<int> qids;
    for (int c : gamma.connection.elements) qids.push_back(rep.phi_map.project(c));
    rep.phi_quotient_graph = cayley_graph(make_connection_set(rep.phi_map.quotient, qids, lim));
  }

  // factor quotients
  for (int idx : chosen) {
    const Subgroup& N = amax[idx];
    for (int c : gamma.connection.elements)
      if (N.contains(c))
        fail(errc::inconsistency_detected, "transitive connection set meets a maximal invariant subgroup");
    CosetMap q = quotient(G, N);
    std::vector<int> qids;
    for (int c : gamma.connection.elements) qids.push_back(q.project(c));
    ConnectionSet qc = make_connection_set(q.quotient, qids, lim);
    if (!is_transitive_set(qc))
      fail(errc::inconsistency_detected, "normal quotient of a transitive set is not transitive");
    if (!is_characteristically_simple(q.quotient, lim))
      fail(errc::inconsistency_detected, "quotient by a maximal member is not characteristically simple");
    auto qlattice = invariant_normal_lattice(qc, lim);
    if (qlattice.all.size() != 1 || !qlattice.all[0].is_trivial())
      fail(errc::inconsistency_detected, "quotient lattice is not trivial");
    rep.factors.push_back(DecompositionFactor{N, std::move(q), cayley_graph(qc)});
  }

  // product graph and zeta
  std::vector<SimpleGraph> factor_graphs;
  for (const auto& f : rep.factors) factor_graphs.push_back(f.quotient_graph.graph);
  rep.product_graph = direct_product_graph(factor_graphs, lim);

  MixedRadix radix;
  for (const auto& f : rep.factors) radix.sizes.push_back(f.coset_map.quotient->order);
  const int nq = rep.phi_map.quotient->order;
  rep.zeta.map.assign(nq, -1);
  for (int g = 0; g < G->order; ++g) {
    int src = rep.phi_map.project(g);
    if (rep.zeta.map[src] >= 0) continue;
    std::vector<int> coords(rep.factors.size());
    for (size_t i = 0; i < rep.factors.size(); ++i) coords[i] = rep.factors[i].coset_map.project(g);
    rep.zeta.map[src] = radix.encode(coords);
  }

  detail::verify_group_isomorphism_zeta(rep);

  // image edges must land on product edges, and the image must be full subdirect
  std::vector<std::pair<int, int>> image_edges;
  for (auto [u, v] : rep.phi_quotient_graph.graph.edges()) {
    int iu = rep.zeta.map[u], iv = rep.zeta.map[v];
    if (!rep.product_graph.has_edge(iu, iv))
      fail(errc::inconsistency_detected, "zeta maps an edge to a non-edge of the product");
    image_edges.emplace_back(iu, iv);
  }
  std::vector<int> image_vertices = rep.zeta.map;
  rep.certificate = is_full_subdirect(factor_graphs, image_vertices, image_edges);
  if (!rep.certificate.full_subdirect)
    fail(errc::inconsistency_detected, "zeta image is not a full subdirect product: " + rep.certificate.failure);
  return rep;
}

// All inclusion-minimal families S in A_max(G;C) with intersection Phi and
// matching index product; evidence for the non-uniqueness question.
inline std::vector<std::vector<Subgroup>> all_minimal_factorizations(const CayleyGraph& gamma,
                                                                     const Limits& lim = default_limits()) {
  if (gamma.group->order > 48)
    fail(errc::order_cap_exceeded, "factorization enumeration supported for |G| <= 48");
  if (!is_generating(gamma.connection))
    fail(errc::not_connected, "decomposition requires a connected Cayley graph");
  if (!is_transitive_set(gamma.connection))
    fail(errc::not_normal_edge_transitive, "decomposition requires a normal edge-transitive Cayley graph");
  auto lattice = invariant_normal_lattice(gamma.connection, lim);
  const auto& amax = lattice.maximal;
  const int m = static_cast<int>(amax.size());
  Bitset phimask = lattice.phi.mask();
  const long long target_index = gamma.group->order / lattice.phi.size();
  std::vector<Bitset> masks;
  for (const auto& N : amax) masks.push_back(N.mask());

  std::vector<uint32_t> valid;
  for (uint32_t s = 1; s < (uint32_t(1) << m); ++s) {
    Bitset inter(gamma.group->order);
    for (int i = 0; i < gamma.group->order; ++i) inter.set(i);
    long long index_product = 1;
    bool overflow = false;
    for (int i = 0; i < m; ++i)
      if (s & (uint32_t(1) << i)) {
        inter &= masks[i];
        index_product *= gamma.group->order / amax[i].size();
        if (index_product > target_index) {
          overflow = true;
          break;
        }
      }
    if (!overflow && inter == phimask && index_product == target_index) valid.push_back(s);
  }
  std::vector<std::vector<Subgroup>> out;
  for (uint32_t s : valid) {
    bool minimal = true;
    for (uint32_t t : valid)
      if (t != s && (t & s) == t) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    std::vector<Subgroup> family;
    for (int i = 0; i < m; ++i)
      if (s & (uint32_t(1) << i)) family.push_back(amax[i]);
    out.push_back(std::move(family));
  }
  return out;
}

}  // namespace netcay
