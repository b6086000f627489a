#include "doctest.h"

#include <set>

#include "netcay/group.hpp"
#include "netcay/parse.hpp"
#include "oracles.hpp"

#include <cstdio>
#include <fstream>

using namespace netcay;

namespace {

void check_group_invariants(const GroupRef& G) {
  const int n = G->order;
  REQUIRE(static_cast<int>(G->mul.size()) == n * n);
  for (int x = 0; x < n; ++x) {
    CHECK(G->times(0, x) == x);
    CHECK(G->times(x, 0) == x);
    CHECK(G->times(x, G->inverse(x)) == 0);
  }
  // rows and columns are permutations
  for (int r = 0; r < n; ++r) {
    std::set<int> row, col;
    for (int c = 0; c < n; ++c) {
      row.insert(G->times(r, c));
      col.insert(G->times(c, r));
    }
    CHECK(static_cast<int>(row.size()) == n);
    CHECK(static_cast<int>(col.size()) == n);
  }
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) REQUIRE(G->times(G->times(a, b), c) == G->times(a, G->times(b, c)));
  }
}

}  // namespace

TEST_CASE("build_from_table basics") {
  SUBCASE("trivial group") {
    GroupRef G = build_from_table({{0}});
    CHECK(G->order == 1);
  }
  SUBCASE("Z2") {
    GroupRef G = build_from_table({{0, 1}, {1, 0}});
    CHECK(G->order == 2);
    CHECK(G->times(1, 1) == 0);
  }
  SUBCASE("non-associative table is rejected") {
    // rows/columns are permutations but (1*1)*2 != 1*(1*2)
    std::vector<std::vector<int>> t = {{0, 1, 2, 3, 4},
                                       {1, 0, 3, 4, 2},
                                       {2, 4, 0, 1, 3},
                                       {3, 2, 4, 0, 1},
                                       {4, 3, 1, 2, 0}};
    CHECK_THROWS_WITH_AS(build_from_table(t), doctest::Contains("associativity"), error);
  }
  SUBCASE("identity relabeling") {
    // Z3 written with identity at position 2
    std::vector<std::vector<int>> t = {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
    GroupRef G = build_from_table(t);
    CHECK(G->times(0, 1) == 1);
    CHECK(G->element_order(1) == 3);
  }
}

TEST_CASE("builders satisfy the group axioms") {
  for (int n : {2, 3, 6, 12}) check_group_invariants(build_cyclic(n));
  for (int n : {2, 3, 4, 6, 10}) check_group_invariants(build_dihedral(n));
  check_group_invariants(build_elementary_abelian(2, 4));
  check_group_invariants(build_elementary_abelian(3, 2));
  check_group_invariants(direct_product(build_dihedral(3), build_cyclic(5)).group);
}

TEST_CASE("dihedral encoding") {
  GroupRef G = build_dihedral(3);
  CHECK(G->order == 6);
  CHECK(G->element_order(1) == 3);  // a
  CHECK(G->element_order(3) == 2);  // b
  // bab = a^-1
  CHECK(G->times(G->times(3, 1), 3) == G->inverse(1));
  SUBCASE("n=2 gives the Klein four group") {
    GroupRef K = build_dihedral(2);
    for (int x = 1; x < 4; ++x) CHECK(K->element_order(x) == 2);
  }
  SUBCASE("n=6: conjugacy class of b has size 3") {
    GroupRef D12 = build_dihedral(6);
    auto classes = conjugacy_classes(D12);
    for (const auto& cl : classes)
      if (std::find(cl.begin(), cl.end(), 6) != cl.end()) CHECK(cl.size() == 3);
  }
}

TEST_CASE("cyclic and product builders") {
  SUBCASE("Z6 = Z2 x Z3") {
    GroupRef z6 = build_cyclic(6);
    GroupRef prod = direct_product(build_cyclic(2), build_cyclic(3)).group;
    // same exponent/order profile; explicit isomorphism via generator images
    CHECK(prod->order == 6);
    CHECK(prod->exponent() == 6);
    CHECK(z6->exponent() == 6);
  }
  SUBCASE("elemab 2^4 has order 16 and exponent 2") {
    GroupRef G = build_elementary_abelian(2, 4);
    CHECK(G->order == 16);
    CHECK(G->exponent() == 2);
  }
  SUBCASE("D6 x Z5 has order 30") {
    CHECK(direct_product(build_dihedral(3), build_cyclic(5)).group->order == 30);
  }
  SUBCASE("product projections are homomorphisms onto the factors") {
    ProductGroup P = direct_product(build_dihedral(3), build_cyclic(4));
    const auto& G = *P.group;
    for (int x = 0; x < G.order; ++x)
      for (int y = 0; y < G.order; ++y) {
        CHECK(P.onto_left.project(G.times(x, y)) ==
              P.onto_left.quotient->times(P.onto_left.project(x), P.onto_left.project(y)));
        CHECK(P.onto_right.project(G.times(x, y)) ==
              P.onto_right.quotient->times(P.onto_right.project(x), P.onto_right.project(y)));
      }
    CHECK(P.onto_left.quotient->order == 6);
    CHECK(P.onto_right.quotient->order == 4);
  }
}

TEST_CASE("subgroup_generated") {
  GroupRef D6 = build_dihedral(3);
  SUBCASE("empty set gives the trivial subgroup") {
    CHECK(subgroup_generated(D6, {}).elements == std::vector<int>{0});
  }
  SUBCASE("a single reflection") {
    CHECK(subgroup_generated(D6, {3}).elements == std::vector<int>{0, 3});
  }
  SUBCASE("two adjacent reflections generate everything") {
    CHECK(subgroup_generated(D6, {3, 4}).size() == 6);
  }
}

TEST_CASE("all_normal_subgroups matches the subset oracle") {
  for (const GroupRef& G : {build_cyclic(6), build_dihedral(3), build_dihedral(4), build_cyclic(12),
                            build_elementary_abelian(2, 3), build_dihedral(8),
                            direct_product(build_cyclic(2), build_cyclic(4)).group}) {
    auto got = all_normal_subgroups(G);
    auto want = oracle::normal_subgroup_subsets(G);
    REQUIRE(got.size() == want.size());
    for (size_t i = 0; i < got.size(); ++i) CHECK(got[i].elements == want[i]);
  }
}

TEST_CASE("normal subgroup counts from the examples") {
  CHECK(all_normal_subgroups(build_cyclic(6)).size() == 4);
  CHECK(all_normal_subgroups(build_dihedral(3)).size() == 3);
  CHECK(all_normal_subgroups(build_dihedral(4)).size() == 6);
}

TEST_CASE("all_subgroups matches the subset oracle") {
  for (const GroupRef& G : {build_dihedral(4), build_cyclic(12), build_elementary_abelian(2, 3),
                            build_dihedral(6)}) {
    auto got = all_subgroups(G);
    auto want = oracle::all_subgroup_subsets(G);
    REQUIRE(got.size() == want.size());
    for (size_t i = 0; i < got.size(); ++i) CHECK(got[i].elements == want[i]);
  }
}

TEST_CASE("quotient maps") {
  SUBCASE("modulo the trivial subgroup") {
    GroupRef G = build_dihedral(3);
    CosetMap q = quotient(G, subgroup_generated(G, {}));
    CHECK(q.quotient->order == 6);
    for (int x = 0; x < 6; ++x) CHECK(q.project(x) == x);
  }
  SUBCASE("D12 modulo <a> has order 2") {
    GroupRef G = build_dihedral(6);
    CosetMap q = quotient(G, subgroup_generated(G, {1}));
    CHECK(q.quotient->order == 2);
  }
  SUBCASE("Z12 modulo <4> is Z4") {
    GroupRef G = build_cyclic(12);
    CosetMap q = quotient(G, subgroup_generated(G, {4}));
    CHECK(q.quotient->order == 4);
    CHECK(q.quotient->element_order(q.project(1)) == 4);
  }
  SUBCASE("rejects non-normal kernels") {
    GroupRef G = build_dihedral(3);
    CHECK_THROWS_AS(quotient(G, subgroup_generated(G, {3})), error);
  }
  SUBCASE("projection is a homomorphism (exhaustive up to order 64)") {
    for (const GroupRef& G : {build_dihedral(8), build_cyclic(24)}) {
      auto normals = all_normal_subgroups(G);
      for (const auto& N : normals) {
        CosetMap q = quotient(G, N);
        for (int x = 0; x < G->order; ++x)
          for (int y = 0; y < G->order; ++y)
            REQUIRE(q.project(G->times(x, y)) == q.quotient->times(q.project(x), q.project(y)));
        CHECK(q.quotient->order * N.size() == G->order);
      }
    }
  }
}

TEST_CASE("frattini subgroup closed forms") {
  SUBCASE("Z12 gives the order-2 subgroup") {
    Subgroup phi = frattini_subgroup(build_cyclic(12));
    CHECK(phi.elements == std::vector<int>{0, 6});
  }
  SUBCASE("cyclic and dihedral radical formula, n = 3..30") {
    for (int n = 3; n <= 30; ++n) {
      int m = radical_of(n);
      std::vector<int> expect;
      for (int x = 0; x < n; x += m) expect.push_back(x);
      CHECK(frattini_subgroup(build_cyclic(n)).elements == expect);
      CHECK(frattini_subgroup(build_dihedral(n)).elements == expect);
    }
  }
  SUBCASE("square-free dihedral parameter gives a trivial subgroup") {
    CHECK(frattini_subgroup(build_dihedral(30)).size() == 1);
    CHECK(frattini_subgroup(build_dihedral(15)).size() == 1);
  }
}

TEST_CASE("order cap produces a clean error") {
  Limits lim;
  lim.order_cap = 10;
  CHECK_THROWS_AS(all_normal_subgroups(build_cyclic(12), lim), error);
  CHECK_THROWS_AS(all_subgroups(build_cyclic(12), lim), error);
}

TEST_CASE("group spec mini-language") {
  CHECK(parse_group_spec("cyclic:6")->order == 6);
  CHECK(parse_group_spec("dihedral:5")->order == 10);
  CHECK(parse_group_spec("elemab:2^3")->order == 8);
  CHECK(parse_group_spec("product(cyclic:2,dihedral:3)")->order == 12);
  CHECK(parse_group_spec("product(product(cyclic:2,cyclic:2),cyclic:3)")->order == 12);
  CHECK_THROWS_AS(parse_group_spec("frobnicate:9"), error);
  CHECK_THROWS_AS(parse_group_spec("elemab:4^2"), error);

  SUBCASE("table file round trip") {
    GroupRef G = build_dihedral(3);
    std::string path = "netcay_test_table.txt";
    {
      std::ofstream out(path);
      out << G->order << "\n";
      for (int r = 0; r < G->order; ++r) {
        for (int c = 0; c < G->order; ++c) out << G->times(r, c) << (c + 1 == G->order ? "" : " ");
        out << "\n";
      }
    }
    GroupRef H = parse_group_spec("table:" + path);
    CHECK(H->order == G->order);
    CHECK(H->mul == G->mul);
    std::remove(path.c_str());
  }
}
