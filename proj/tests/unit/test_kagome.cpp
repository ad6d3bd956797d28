#include <catch2/catch_amalgamated.hpp>

#include "ice20v/kagome.hpp"

using namespace ice20v;

TEST_CASE("weight system report passes with working negative controls") {
  KagomeReport rep = verify_kagome();
  CHECK(rep.all_pass());
  int relations = 0, yb_num = 0, yb_sym = 0, controls = 0;
  for (const auto& c : rep.checks) {
    INFO(c.id << " " << c.detail);
    CHECK(c.pass);
    if (c.id.rfind("weight-relation", 0) == 0) ++relations;
    if (c.id.rfind("yb-combinatorial", 0) == 0) ++yb_num;
    if (c.id.rfind("yb-symbolic", 0) == 0) ++yb_sym;
    if (c.expected_fail) ++controls;
  }
  CHECK(relations == 10);
  CHECK(yb_num == 3);
  CHECK(yb_sym == 3);
  CHECK(controls == 2);
}

TEST_CASE("symbolic residuals vanish identically") {
  auto w = kagdetail::integrable_weights();
  auto res = kagdetail::yang_baxter_residuals(w.a1, w.b1, w.c1, w.a2, w.b2, w.c2, w.a3, w.b3,
                                              w.c3);
  for (const auto& r : res) CHECK(r.is_zero());
}

TEST_CASE("a perturbed weight leaves a nonzero residual") {
  auto w = kagdetail::integrable_weights();
  LaurentQ one = LaurentQ::constant({"Z", "W", "T", "q"}, Rat(1));
  auto res = kagdetail::yang_baxter_residuals(w.a1, w.b1 + one, w.c1, w.a2, w.b2, w.c2, w.a3,
                                              w.b3, w.c3);
  CHECK_FALSE(res[0].is_zero());
}
