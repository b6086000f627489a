#include "doctest.h"

#include "netcay/frattini.hpp"
#include "oracles.hpp"

using namespace netcay;

namespace {

std::vector<int> reflections(int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) out.push_back(n + i);
  return out;
}

}  // namespace

TEST_CASE("make_connection_set validation") {
  GroupRef D6 = build_dihedral(3);
  GroupRef Z6 = build_cyclic(6);
  CHECK_NOTHROW(make_connection_set(D6, {3, 4}));
  CHECK_THROWS_AS(make_connection_set(Z6, {1}), error);        // 1 lacks its inverse 5
  CHECK_NOTHROW(make_connection_set(Z6, {1, 5}));
  CHECK_THROWS_AS(make_connection_set(Z6, {0, 1, 5}), error);  // identity
  CHECK_THROWS_AS(make_connection_set(Z6, std::vector<int>{}), error);
}

TEST_CASE("is_generating") {
  GroupRef D6 = build_dihedral(3);
  GroupRef Z6 = build_cyclic(6);
  GroupRef D12 = build_dihedral(6);
  CHECK(is_generating(make_connection_set(D6, {3, 4})));
  CHECK(!is_generating(make_connection_set(Z6, {2, 4})));
  CHECK(!is_generating(make_connection_set(D12, {1, 5})));  // <a> is proper
}

TEST_CASE("is_transitive_set") {
  GroupRef D12 = build_dihedral(6);
  AutGroup A = automorphism_group(D12);
  SUBCASE("pair of adjacent reflections") {
    CHECK(is_transitive_set(make_connection_set(D12, {6, 7}, A)));
  }
  SUBCASE("{a,a^5,b} has orbits {a,a^5},{b}, not mutually inverse") {
    CHECK(!is_transitive_set(make_connection_set(D12, {1, 5, 6}, A)));
  }
  SUBCASE("all reflections") {
    CHECK(is_transitive_set(make_connection_set(D12, reflections(6), A)));
  }
  SUBCASE("non-generating sets are refused") {
    CHECK_THROWS_AS(is_transitive_set(make_connection_set(D12, {1, 5}, A)), error);
  }
}

TEST_CASE("invariant normal lattice") {
  SUBCASE("Z6 with {1,5}") {
    GroupRef G = build_cyclic(6);
    auto lat = invariant_normal_lattice(make_connection_set(G, {1, 5}));
    REQUIRE(lat.all.size() == 3);  // {0}, <3>, <2>
    CHECK(lat.all[0].elements == std::vector<int>{0});
    CHECK(lat.all[1].elements == std::vector<int>{0, 3});
    CHECK(lat.all[2].elements == std::vector<int>{0, 2, 4});
    REQUIRE(lat.maximal.size() == 2);
    CHECK(lat.phi.elements == std::vector<int>{0});
  }
  SUBCASE("odd dihedral with {b,ba}: A_max = {<a>}") {
    for (int n : {3, 5, 7}) {
      GroupRef G = build_dihedral(n);
      auto lat = invariant_normal_lattice(make_connection_set(G, {n, n + 1}));
      REQUIRE(lat.maximal.size() == 1);
      std::vector<int> rot;
      for (int i = 0; i < n; ++i) rot.push_back(i);
      CHECK(lat.phi.elements == rot);
    }
  }
  SUBCASE("D12 with {a,a^5,b}: three maximal members, phi = <a^2>") {
    GroupRef G = build_dihedral(6);
    auto lat = invariant_normal_lattice(make_connection_set(G, {1, 5, 6}));
    REQUIRE(lat.maximal.size() == 3);
    CHECK(lat.phi.elements == std::vector<int>{0, 2, 4});
  }
}

TEST_CASE("normal C-closures") {
  SUBCASE("empty set stays empty") {
    GroupRef G = build_dihedral(3);
    ConnectionSet C = make_connection_set(G, {3, 4});
    CHECK(normal_c_closure(C, {}).empty());
  }
  SUBCASE("a single reflection closes to the full class for odd n") {
    GroupRef G = build_dihedral(3);
    ConnectionSet C = make_connection_set(G, {1, 2});  // {a, a^-1} valid but not generating; closure is defined anyway
    CHECK(normal_c_closure(C, {3}) == std::vector<int>{3, 4, 5});
  }
  SUBCASE("fusion blocks partition the group") {
    GroupRef G = build_dihedral(6);
    ConnectionSet C = make_connection_set(G, {6, 7});
    auto blocks = fusion_blocks(C);
    int total = 0;
    for (const auto& b : blocks) total += static_cast<int>(b.size());
    CHECK(total == G->order);
    CHECK(blocks[0] == std::vector<int>{0});
    // tau_{n-1} phi fuses the two reflection classes into one block of 6
    bool found_reflections = false;
    for (const auto& b : blocks) found_reflections = found_reflections || b.size() == 6;
    CHECK(found_reflections);
  }
}

TEST_CASE("removal property") {
  SUBCASE("everything minus the identity always works") {
    for (const GroupRef& G : {build_dihedral(5), build_cyclic(6)}) {
      AutGroup A = automorphism_group(G);
      for (const auto& ids : oracle::inverse_closed_generating_subsets(G)) {
        ConnectionSet C = make_connection_set(G, ids, A);
        std::vector<int> everything;
        for (int x = 1; x < G->order; ++x) everything.push_back(x);
        CHECK(check_removal_property(C, everything));
      }
    }
  }
  SUBCASE("D10 with {b,ba}: closure of {b,a}") {
    GroupRef G = build_dihedral(5);
    ConnectionSet C = make_connection_set(G, {5, 6});
    auto closed = normal_c_closure(C, {5, 1});
    CHECK(subgroup_generated(G, closed).size() == 10);
    CHECK(check_removal_property(C, closed));
    // removing phi = <a> leaves exactly the five reflections
    auto lat = invariant_normal_lattice(C);
    Bitset phi = lat.phi.mask();
    std::vector<int> rest;
    for (int x : closed)
      if (!phi.test(x)) rest.push_back(x);
    CHECK(rest == std::vector<int>{5, 6, 7, 8, 9});
    CHECK(subgroup_generated(G, rest).size() == 10);
  }
  SUBCASE("Z6 with {1,5}: phi trivial, nothing removed") {
    GroupRef G = build_cyclic(6);
    ConnectionSet C = make_connection_set(G, {1, 5});
    CHECK(check_removal_property(C, {1, 2, 3, 4, 5}));
  }
  SUBCASE("precondition violations are refused") {
    GroupRef G = build_dihedral(5);
    ConnectionSet C = make_connection_set(G, {5, 6});
    CHECK_THROWS_AS(check_removal_property(C, {5}), error);     // closed but not generating
    CHECK_THROWS_AS(check_removal_property(C, {1, 5}), error);  // not closed
  }
  SUBCASE("holds for every normal C-closed generating set on small groups") {
    // the closed sets are exactly the unions of fusion blocks
    for (const GroupRef& G : {build_dihedral(5), build_dihedral(6), build_cyclic(12),
                              build_elementary_abelian(2, 3)}) {
      AutGroup A = automorphism_group(G);
      for (const auto& cids : oracle::inverse_closed_generating_subsets(G)) {
        ConnectionSet C = make_connection_set(G, cids, A);
        auto blocks = fusion_blocks(C);
        if (blocks.size() > 10) continue;  // keeps the sweep bounded; never hit here
        const uint32_t total = uint32_t(1) << blocks.size();
        for (uint32_t s = 1; s < total; ++s) {
          std::vector<int> X;
          for (size_t b = 0; b < blocks.size(); ++b)
            if (s & (uint32_t(1) << b)) X.insert(X.end(), blocks[b].begin(), blocks[b].end());
          std::sort(X.begin(), X.end());
          if (subgroup_generated(G, X).size() != G->order) continue;
          REQUIRE(check_removal_property(C, X));
        }
      }
    }
  }
}

TEST_CASE("membership criterion equals the lattice definition") {
  // exhaustive over all inverse-closed generating sets for small groups
  for (const GroupRef& G : {build_cyclic(6), build_dihedral(3), build_dihedral(5), build_cyclic(8),
                            build_elementary_abelian(2, 3)}) {
    AutGroup A = automorphism_group(G);
    auto normals = all_normal_subgroups(G);
    for (const auto& ids : oracle::inverse_closed_generating_subsets(G)) {
      ConnectionSet C = make_connection_set(G, ids, A);
      auto lat = invariant_normal_lattice(C, normals);
      Bitset phi = lat.phi.mask();
      auto profile = phi_membership_profile(C);
      for (int y = 0; y < G->order; ++y) REQUIRE(profile[y] == phi.test(y));
    }
  }
}

TEST_CASE("membership criterion named instances") {
  GroupRef G = build_dihedral(5);
  ConnectionSet C = make_connection_set(G, {5, 6});
  CHECK(phi_membership_oracle(C, 0));       // identity
  CHECK(phi_membership_oracle(C, 1));       // a, inside phi = <a>
  CHECK(!phi_membership_oracle(C, 5));      // b: X = {} with closure({b}) generating
  Limits lim;
  GroupRef big = build_dihedral(9);
  ConnectionSet D = make_connection_set(big, {9, 10});
  CHECK_THROWS_AS(phi_membership_oracle(D, 0), error);  // |G| = 18 > 16
}

TEST_CASE("coset intersection profiles") {
  SUBCASE("D10 with {b,ba}: ell = 2, one nonempty coset") {
    GroupRef G = build_dihedral(5);
    auto profile = coset_profile(make_connection_set(G, {5, 6}));
    CHECK(profile.ell == 2);
    CHECK(profile.nonempty_cosets == std::vector<int>{1});
  }
  SUBCASE("D12 with all reflections: phi = <a>, ell = 6") {
    GroupRef G = build_dihedral(6);
    auto profile = coset_profile(make_connection_set(G, reflections(6)));
    CHECK(profile.ell == 6);
    CHECK(profile.nonempty_cosets.size() == 1);
  }
  SUBCASE("simple group: phi trivial, ell = 1") {
    GroupRef G = build_cyclic(5);
    auto profile = coset_profile(make_connection_set(G, {1, 4}));
    CHECK(profile.ell == 1);
  }
  SUBCASE("refused for non-transitive sets") {
    GroupRef G = build_dihedral(6);
    CHECK_THROWS_AS(coset_profile(make_connection_set(G, {1, 5, 6})), error);
  }
  SUBCASE("transitive sets avoid phi and meet cosets evenly (sampled groups)") {
    for (const GroupRef& G : {build_dihedral(4), build_dihedral(6), build_cyclic(8), build_cyclic(12)}) {
      AutGroup A = automorphism_group(G);
      auto normals = all_normal_subgroups(G);
      for (const auto& ids : oracle::inverse_closed_generating_subsets(G)) {
        ConnectionSet C = make_connection_set(G, ids, A);
        if (!is_transitive_set(C)) continue;
        auto lat = invariant_normal_lattice(C, normals);
        for (int c : C.elements) REQUIRE(!lat.phi.contains(c));
        CHECK_NOTHROW(coset_profile(C));
      }
    }
  }
}

TEST_CASE("images of transitive sets stay transitive") {
  GroupRef G = build_dihedral(6);
  AutGroup A = automorphism_group(G);
  ConnectionSet C = make_connection_set(G, {6, 7}, A);
  REQUIRE(is_transitive_set(C));
  for (const auto& sigma : A.elements) {
    ConnectionSet img = transitive_set_image(C, sigma);
    CHECK(is_transitive_set(img));
    CHECK(img.aut_gc.size() == C.aut_gc.size());
  }
  SUBCASE("identity image is the set itself") {
    ConnectionSet img = transitive_set_image(C, identity_automorphism(G));
    CHECK(img.elements == C.elements);
  }
  SUBCASE("phi^i carries {b,ba} to {ba^i, ba^(i+1)}") {
    // phi: a -> a, b -> ba is the automorphism with image[6] = 7
    for (const auto& sigma : A.elements)
      if (sigma.image[1] == 1 && sigma.image[6] == 7) {
        ConnectionSet img = transitive_set_image(C, sigma);
        CHECK(img.elements == std::vector<int>{7, 8});
      }
  }
  SUBCASE("transported stabilizer matches a fresh computation") {
    for (size_t i = 0; i < A.elements.size(); i += 4) {
      ConnectionSet img = transitive_set_image(C, A.elements[i]);
      ConnectionSet fresh = make_connection_set(G, img.elements, A);
      REQUIRE(img.aut_gc.size() == fresh.aut_gc.size());
      for (int j = 0; j < img.aut_gc.size(); ++j)
        CHECK(img.aut_gc.elements[j].image == fresh.aut_gc.elements[j].image);
    }
  }
}

TEST_CASE("products of transitive sets") {
  auto orbit_condition = [](const ConnectionSet& P) {
    if (P.orbit_partition.size() == 1) return true;
    if (P.orbit_partition.size() != 2) return false;
    std::vector<int> inv0;
    for (int x : P.orbit_partition[0]) inv0.push_back(P.parent->inverse(x));
    std::sort(inv0.begin(), inv0.end());
    return inv0 == P.orbit_partition[1];
  };
  SUBCASE("Z6 x Z2") {
    GroupRef Z6 = build_cyclic(6), Z2 = build_cyclic(2);
    ConnectionSet C = make_connection_set(Z6, {1, 5});
    ConnectionSet D = make_connection_set(Z2, {1});
    ConnectionSet P = product_transitive_set(C, D);
    CHECK(P.parent->order == 12);
    CHECK(orbit_condition(P));
  }
  SUBCASE("D6 x Z2") {
    ConnectionSet C = make_connection_set(build_dihedral(3), {3, 4});
    ConnectionSet D = make_connection_set(build_cyclic(2), {1});
    CHECK(orbit_condition(product_transitive_set(C, D)));
  }
  SUBCASE("a fully transitive product: E4 x E4 on all involutions") {
    GroupRef E4 = build_elementary_abelian(2, 2);
    ConnectionSet C = make_connection_set(E4, {1, 2, 3});
    ConnectionSet P = product_transitive_set(C, C);
    CHECK(orbit_condition(P));
    // here the product set does generate, so the full definition applies
    CHECK(is_generating(P));
    CHECK(is_transitive_set(P));
  }
  SUBCASE("non-transitive factors are refused") {
    GroupRef D12 = build_dihedral(6);
    ConnectionSet C = make_connection_set(D12, {1, 5, 6});
    ConnectionSet D = make_connection_set(build_cyclic(2), {1});
    CHECK_THROWS_AS(product_transitive_set(C, D), error);
  }
  SUBCASE("two intransitive stabilizers are refused") {
    // Frobenius group of order 21: the fourteen order-3 elements split into two
    // mutually inverse classes no automorphism can swap.
    std::vector<std::vector<int>> table(21, std::vector<int>(21));
    auto enc = [](int i, int j) { return i * 3 + j; };
    int pw[3] = {1, 2, 4};  // 2^j mod 7
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 7; ++k)
          for (int l = 0; l < 3; ++l) table[enc(i, j)][enc(k, l)] = enc((i + pw[j] * k) % 7, (j + l) % 3);
    GroupRef F21 = build_from_table(table, "frobenius:21");
    REQUIRE(F21->order == 21);
    std::vector<int> order3;
    for (int x = 1; x < 21; ++x)
      if (F21->element_order(x) == 3) order3.push_back(x);
    REQUIRE(order3.size() == 14);
    ConnectionSet C = make_connection_set(F21, order3);
    REQUIRE(is_generating(C));
    REQUIRE(is_transitive_set(C));
    REQUIRE(C.orbit_partition.size() == 2);
    CHECK_THROWS_AS(product_transitive_set(C, C), error);
  }
}

TEST_CASE("phi(G) is contained in phi(G;C) on small groups") {
  for (const GroupRef& G : {build_cyclic(6), build_cyclic(8), build_dihedral(4), build_dihedral(5),
                            build_elementary_abelian(3, 2)}) {
    AutGroup A = automorphism_group(G);
    auto normals = all_normal_subgroups(G);
    Subgroup phiG = frattini_subgroup(G);
    for (const auto& ids : oracle::inverse_closed_generating_subsets(G)) {
      ConnectionSet C = make_connection_set(G, ids, A);
      auto lat = invariant_normal_lattice(C, normals);
      REQUIRE(subgroup_subset(phiG, lat.phi));
    }
  }
}

TEST_CASE("maximal members are intersections of maximal-subgroup conjugate images") {
  // every N in A_max(G;C) equals the intersection of the (M^g)^sigma over any
  // maximal subgroup M containing it; checked on the dihedral casebook instances
  for (int n : {3, 4, 5, 6}) {
    GroupRef G = build_dihedral(n);
    AutGroup A = automorphism_group(G);
    auto maximal_subs = maximal_proper_subgroups(G);
    for (const std::vector<int>& ids : {std::vector<int>{1, n - 1, n}, std::vector<int>{n, n + 1}}) {
      ConnectionSet C = make_connection_set(G, ids, A);
      auto lat = invariant_normal_lattice(C);
      for (const auto& N : lat.maximal) {
        int witnesses = 0;
        for (const auto& M : maximal_subs) {
          if (!subgroup_subset(N, M)) continue;
          Bitset inter(G->order);
          for (int i = 0; i < G->order; ++i) inter.set(i);
          for (int g = 0; g < G->order; ++g)
            for (const auto& sigma : C.aut_gc.elements) {
              Bitset img(G->order);
              for (int h : M.elements) img.set(sigma.image[G->conj(h, g)]);
              inter &= img;
            }
          ++witnesses;
          REQUIRE(inter == N.mask());
        }
        CHECK(witnesses > 0);
      }
    }
  }
}

TEST_CASE("connection-set expression parsing") {
  GroupRef D6 = build_dihedral(3);
  CHECK(parse_connection_expr(D6, "b.a^0,b.a^1") == std::vector<int>{3, 4});
  CHECK(parse_connection_expr(D6, "a^1,a^2") == std::vector<int>{1, 2});
  CHECK(parse_connection_expr(D6, "all-reflections") == std::vector<int>{3, 4, 5});
  CHECK(parse_connection_expr(D6, "b, a^1, a^-1") == std::vector<int>{1, 2, 3});
  GroupRef Z6 = build_cyclic(6);
  CHECK(parse_connection_expr(Z6, "1,5") == std::vector<int>{1, 5});
  CHECK_THROWS_AS(parse_connection_expr(Z6, "a^1,a^5"), error);
  CHECK_THROWS_AS(parse_connection_expr(Z6, "7"), error);
  CHECK_THROWS_AS(parse_connection_expr(Z6, ""), error);
}
