#include "doctest.h"

#include "netcay/casebook.hpp"

using namespace netcay;

TEST_CASE("every registered case passes") {
  for (const auto& id : casebook_ids()) {
    CAPTURE(id);
    CaseReport rep = run_case(id);
    CHECK(rep.case_id == id);
    for (const auto& c : rep.claims) {
      CAPTURE(c.description);
      CAPTURE(c.expected);
      CAPTURE(c.computed);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("unknown case ids are refused") {
  CHECK_THROWS_AS(run_case("ex9.9"), error);
}

TEST_CASE("case reports are reproducible") {
  CaseReport a = run_case("thm1.2-z6");
  CaseReport b = run_case("thm1.2-z6");
  CHECK(to_json(a).dump() == to_json(b).dump());
}

TEST_CASE("json round trip is byte-identical") {
  CaseReport rep = run_case("ex2.1");
  std::string once = to_json(rep).dump(2);
  std::string twice = nlohmann::ordered_json::parse(once).dump(2);
  CHECK(once == twice);
}

TEST_CASE("symmetric group fixture") {
  GroupRef S4 = caselib::symmetric_group(4);
  CHECK(S4->order == 24);
  CHECK(S4->element_order(caselib::perm_rank({1, 0, 2, 3})) == 2);
  CHECK(S4->element_order(caselib::perm_rank({1, 2, 3, 0})) == 4);
  SUBCASE("rank and unrank invert each other") {
    for (int r = 0; r < 24; ++r) CHECK(caselib::perm_rank(caselib::perm_unrank(4, r)) == r);
  }
  SUBCASE("product rule composes permutations") {
    for (int g = 0; g < 24; g += 5)
      for (int h = 0; h < 24; h += 7) {
        auto pg = caselib::perm_unrank(4, g);
        auto ph = caselib::perm_unrank(4, h);
        std::vector<int> comp(4);
        for (int x = 0; x < 4; ++x) comp[x] = ph[pg[x]];
        CHECK(S4->times(g, h) == caselib::perm_rank(comp));
      }
  }
}
