#include <catch2/catch_amalgamated.hpp>

#include "ice20v/refinement.hpp"
#include "ice20v/sixv.hpp"
#include "support/oracles.hpp"

using namespace ice20v;

TEST_CASE("unit weights reproduce the alternating-sign counts") {
  const long asm_ref[] = {1, 2, 7, 42, 429};
  for (std::size_t n = 1; n <= 5; ++n)
    CHECK(count_6v<Int>(n, Int(1), Int(1), Int(1)) == asm_ref[n - 1]);
}

TEST_CASE("single vertex is a turn") {
  CHECK(count_6v<Int>(1, Int(5), Int(7), Int(11)) == 11);
}

TEST_CASE("combinatorial weights match the 20V counts") {
  const long a_ref[] = {1, 3, 23, 433, 19705};
  for (std::size_t n = 1; n <= 5; ++n) {
    Cyclotomic z = count_6v_combinatorial(n);
    CHECK(z.rational_part() == a_ref[n - 1]);
    CHECK(z.sqrt2_part() == 0);
  }
}

TEST_CASE("weights land in the sqrt2 subring with nonnegative parts") {
  for (std::size_t n = 1; n <= 5; ++n) {
    Cyclotomic z = count_6v_combinatorial(n);
    Rat r = z.rational_part(), s = z.sqrt2_part();
    CHECK(r.get_den() == 1);
    CHECK(s.get_den() == 1);
    CHECK(sgn(r) >= 0);
    CHECK(sgn(s) >= 0);
  }
}

TEST_CASE("refined combinatorial counts") {
  Poly<Cyclotomic> z2 = count_6v_combinatorial_refined(2);
  REQUIRE(z2.coeffs().size() == 2);
  CHECK(z2.coeffs()[0] == Cyclotomic::from_rat(2, Rat(1)));
  CHECK(z2.coeffs()[1] == Cyclotomic::from_rat(2, Rat(2)));
  for (std::size_t n = 1; n <= 4; ++n)
    CHECK(count_6v_combinatorial_refined(n).eval(Cyclotomic::from_rat(2, Rat(1))) ==
          count_6v_combinatorial(n));
}

TEST_CASE("refinement theorem holds exactly") {
  for (int n = 1; n <= 4; ++n) {
    RefinementReport r = verify_refinement_theorem(n);
    INFO("n = " << n);
    for (const auto& c : r.checks) {
      INFO(c.id << ": " << c.detail);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("refined coefficients match the reference lists at n = 5") {
  PolyZ z1 = count_20v_refined(BoundarySpec::Kind::DWBC1, 5);
  CHECK(z1 == PolyZ({Int(433), Int(6322), Int(7874), Int(4210), Int(866)}));
}

TEST_CASE("staggered reduction check report") {
  for (std::size_t n = 1; n <= 2; ++n)
    for (const auto& c : staggered_checks(n)) {
      INFO(c.id << " " << c.detail);
      CHECK(c.pass);
    }
}

TEST_CASE("staggered reduction against brute force and the 20V counts") {
  struct Var {
    StaggeredVariant v;
    BoundarySpec::Kind kind;
  };
  const Var vars[] = {{StaggeredVariant::WS, BoundarySpec::Kind::DWBC3},
                      {StaggeredVariant::WSEN, BoundarySpec::Kind::DWBC4},
                      {StaggeredVariant::DWBC, BoundarySpec::Kind::DWBC1}};
  for (const auto& var : vars) {
    for (std::size_t n = 1; n <= 2; ++n) {
      Cyclotomic dp = count_staggered_6v(n, var.v);
      Cyclotomic brute = testsupport::brute_staggered(n, var.v);
      CHECK(dp == brute);
      Int expect = count_20v(var.kind, int(n)) << (n * n);
      REQUIRE(dp.is_rational());
      CHECK(dp.rational_part() == Rat(expect));
    }
    Cyclotomic z3 = count_staggered_6v(3, var.v);
    Int expect3 = count_20v(var.kind, 3) << 9;
    REQUIRE(z3.is_rational());
    CHECK(z3.rational_part() == Rat(expect3));
  }
}
