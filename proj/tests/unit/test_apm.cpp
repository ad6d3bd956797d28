#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "ice20v/apm.hpp"
#include "ice20v/jsonio.hpp"
#include "ice20v/refdata.hpp"

using namespace ice20v;

namespace {

// Lift a square-ice DWBC configuration (paths entering west, leaving south,
// no diagonals) to the triangular grid by filling the diagonal lines whose
// boundary edges are occupied: x + y <= n for the type-1 corners, <= n-1 for
// type 2, none for type 3.
LatticeConfig lift_asm(const LatticeConfig& base, BoundarySpec::Kind kind) {
  std::size_t n = base.rows();
  LatticeConfig c = base;
  c.set_boundary(BoundarySpec::square(kind, int(n)).label());
  std::size_t cut = kind == BoundarySpec::Kind::DWBC1   ? n
                    : kind == BoundarySpec::Kind::DWBC2 ? n - 1
                                                        : 0;
  for (std::size_t x = 0; x <= n; ++x)
    for (std::size_t y = 0; y <= n; ++y) c.set_d(x, y, x + y >= 1 && x + y <= cut);
  return c;
}

// All square-ice DWBC configurations by brute force over vertical edges.
std::vector<LatticeConfig> all_asm_configs(std::size_t n) {
  std::vector<LatticeConfig> out;
  std::size_t nv = n * (n - 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << nv); ++mask) {
    LatticeConfig c(n, n, "SQUARE6V");
    for (std::size_t y = 1; y <= n; ++y) c.set_h(0, y, true);
    for (std::size_t x = 1; x <= n; ++x) c.set_v(x, 0, true);
    std::size_t bit = 0;
    for (std::size_t x = 1; x <= n; ++x)
      for (std::size_t y = 1; y < n; ++y) c.set_v(x, y, mask >> bit++ & 1);
    // complete horizontals by flow conservation and test the ice rule
    bool ok = true;
    for (std::size_t x = 1; x <= n && ok; ++x)
      for (std::size_t y = n; y >= 1; --y) {
        int in = int(c.h(x - 1, y)) + int(c.v(x, y));
        int out_s = c.v(x, y - 1);
        int e = in - out_s;
        if (e < 0 || e > 1) {
          ok = false;
          break;
        }
        c.set_h(x, y, e);
        if (y == 1) break;
      }
    if (!ok) continue;
    for (std::size_t y = 1; y <= n; ++y)
      if (c.h(n, y)) ok = false;
    if (ok) out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("reference example matrices round-trip through their configurations") {
  struct Case {
    int type;
    BoundarySpec::Kind kind;
  };
  const Case cases[] = {{1, BoundarySpec::Kind::DWBC1},
                        {2, BoundarySpec::Kind::DWBC2},
                        {3, BoundarySpec::Kind::DWBC3},
                        {4, BoundarySpec::Kind::DWBC4}};
  for (const auto& cs : cases) {
    ApmMatrix m = refdata::example_apm(cs.type);
    LatticeConfig c = from_apm(m, BoundarySpec::square(cs.kind, int(m.size())));
    CHECK(c.ice_rule_holds());
    CHECK(to_apm(c) == m);
    CHECK(apm_validate(m, cs.type));
    CHECK(check_sum_rules(m, cs.type).all_pass());
  }
}

TEST_CASE("example values at pinned positions") {
  ApmMatrix t1 = refdata::example_apm(1);
  CHECK(apm_entry_symbol(t1.value(0, 2)) == "-w");
  CHECK(apm_entry_symbol(t1.value(0, 0)) == "0");
  ApmMatrix t3 = refdata::example_apm(3);
  CHECK(apm_entry_symbol(t3.value(4, 0)) == "1");
  CHECK(apm_entry_symbol(t3.value(4, 1)) == "w");
  CHECK(apm_entry_symbol(t3.value(4, 2)) == "-w2");
  CHECK(apm_entry_symbol(t3.value(4, 4)) == "-w2");
}

TEST_CASE("type-4 example sums match the reference values") {
  ApmMatrix m = refdata::example_apm(4);
  std::size_t n = m.size();
  const long rows_w2[] = {4, -2, 2, -2, 3, -5};
  for (std::size_t i = 0; i < n; ++i) {
    Eisenstein s;
    for (std::size_t j = 0; j < n; ++j) s += m.value(i, j);
    CHECK(s == Eisenstein::omega2() * Eisenstein(rows_w2[i], 0));
  }
  const long cols_w[] = {-2, -2, 1, -2, 2, 3};
  for (std::size_t j = 0; j < n; ++j) {
    Eisenstein s;
    for (std::size_t i = 0; i < n; ++i) s += m.value(i, j);
    CHECK(s == Eisenstein::omega() * Eisenstein(cols_w[j], 0));
  }
  Eisenstein total;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) total += m.value(i, j);
  CHECK(total.is_zero());
}

TEST_CASE("every enumerated image validates with its rules") {
  struct Case {
    BoundarySpec::Kind kind;
    int type;
  };
  const Case cases[] = {{BoundarySpec::Kind::DWBC1, 1},
                        {BoundarySpec::Kind::DWBC2, 2},
                        {BoundarySpec::Kind::DWBC3, 3},
                        {BoundarySpec::Kind::DWBC4, 4}};
  for (const auto& cs : cases) {
    for (int n = 1; n <= 3; ++n) {
      std::set<std::string> images;
      std::size_t count = 0;
      for_each_config(make_boundary(BoundarySpec::square(cs.kind, n)),
                      [&](const LatticeConfig& c) {
                        ApmMatrix m = to_apm(c);
                        CHECK(apm_validate(m, cs.type));
                        CHECK(check_sum_rules(m, cs.type).all_pass());
                        images.insert(to_json(m).dump());
                        ++count;
                        return true;
                      });
      CHECK(images.size() == count);
    }
  }
}

TEST_CASE("alternating-sign lifts are valid phase matrices of each type") {
  for (std::size_t n = 2; n <= 3; ++n) {
    auto bases = all_asm_configs(n);
    const long asm_ref[] = {1, 2, 7};
    CHECK(bases.size() == std::size_t(asm_ref[n - 1]));
    const BoundarySpec::Kind kinds[] = {BoundarySpec::Kind::DWBC1, BoundarySpec::Kind::DWBC2,
                                        BoundarySpec::Kind::DWBC3};
    int type = 0;
    for (auto kind : kinds) {
      ++type;
      BoundaryData B = make_boundary(BoundarySpec::square(kind, int(n)));
      for (const auto& base : bases) {
        LatticeConfig lifted = lift_asm(base, kind);
        REQUIRE(lifted.ice_rule_holds());
        REQUIRE(lifted.matches_boundary(B));
        ApmMatrix m = to_apm(lifted);
        CHECK(apm_validate(m, type));
        // entries stay in {0, 1, -1}
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            Eisenstein v = m.value(i, j);
            CHECK((v.is_zero() || v == Eisenstein(1, 0) || v == Eisenstein(-1, 0)));
          }
      }
    }
  }
}

TEST_CASE("all-transmitter vertex maps to zero") {
  // the fully osculating configuration: every vertex transmits on every line
  LatticeConfig c = from_apm(ApmMatrix(3), BoundarySpec::square(BoundarySpec::Kind::DWBC4, 3));
  ApmMatrix m = to_apm(c);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(m.value(i, j).is_zero());
      VertexEnvironment e = c.env(j + 1, 3 - i);
      CHECK(e.w_in == e.e_out);
      CHECK(e.n_in == e.s_out);
      CHECK(e.nw_in == e.se_out);
    }
}

TEST_CASE("zero matrix validates only as type 4") {
  ApmMatrix zero(4);
  CHECK(apm_validate(zero, 4));
  CHECK_FALSE(apm_validate(zero, 1));
  CHECK_FALSE(apm_validate(zero, 2));
  CHECK_FALSE(apm_validate(zero, 3));
}

TEST_CASE("turning weights aggregate to the matrix values") {
  const BoundarySpec::Kind kinds[] = {BoundarySpec::Kind::DWBC1, BoundarySpec::Kind::DWBC2,
                                      BoundarySpec::Kind::DWBC3, BoundarySpec::Kind::DWBC4};
  for (auto kind : kinds) {
    for (int n = 1; n <= 3; ++n) {
      for_each_config(make_boundary(BoundarySpec::square(kind, n)),
                      [&](const LatticeConfig& c) {
                        TurningProfile p = turning_profile(c);
                        ApmMatrix m = to_apm(c);
                        for (std::size_t i = 0; i < m.size(); ++i)
                          for (std::size_t j = 0; j < m.size(); ++j)
                            CHECK(p.at(i, j) == m.value(i, j));
                        return true;
                      });
    }
  }
}

TEST_CASE("path totals depend only on the first and last edges") {
  for (int n = 1; n <= 3; ++n) {
    for_each_config(make_boundary(BoundarySpec::square(BoundarySpec::Kind::DWBC1, n)),
                    [&](const LatticeConfig& c) {
                      TurningProfile p = turning_profile(c);
                      int hv = 0, dd = 0;
                      for (const auto& path : p.paths) {
                        if (path.first_axis == EdgeAxis::H && path.last_axis == EdgeAxis::V) {
                          CHECK(path.total == Eisenstein(1, 0));
                          ++hv;
                        } else if (path.first_axis == EdgeAxis::D &&
                                   path.last_axis == EdgeAxis::D) {
                          CHECK(path.total.is_zero());
                          ++dd;
                        }
                      }
                      CHECK(hv == n);
                      CHECK(hv + dd == int(p.paths.size()));
                      CHECK(int(p.paths.size()) == 2 * n);
                      return true;
                    });
  }
  for_each_config(make_boundary(BoundarySpec::square(BoundarySpec::Kind::DWBC4, 2)),
                  [&](const LatticeConfig& c) {
                    TurningProfile p = turning_profile(c);
                    Eisenstein total;
                    for (const auto& path : p.paths) {
                      if (path.first_axis == EdgeAxis::V && path.last_axis == EdgeAxis::H)
                        CHECK(path.total == Eisenstein(-1, 0));
                      if (path.first_axis == EdgeAxis::H && path.last_axis == EdgeAxis::V)
                        CHECK(path.total == Eisenstein(1, 0));
                      total += path.total;
                    }
                    CHECK(total.is_zero());
                    return true;
                  });
}

TEST_CASE("path totals telescope to the boundary potentials") {
  for (auto kind : {BoundarySpec::Kind::DWBC1, BoundarySpec::Kind::DWBC3,
                    BoundarySpec::Kind::DWBC4}) {
    for_each_config(make_boundary(BoundarySpec::square(kind, 3)),
                    [&](const LatticeConfig& c) {
                      for (const auto& p : turning_profile(c).paths)
                        CHECK(p.total ==
                              turning_eta(p.last_axis) - turning_eta(p.first_axis));
                      return true;
                    });
  }
}

TEST_CASE("unrealizable matrices are rejected") {
  // flipping one entry of a valid example breaks the reconstruction
  ApmMatrix m = refdata::example_apm(1);
  m.triple(0, 0) = {1, -1, 0};
  CHECK_THROWS_AS(from_apm(m, BoundarySpec::square(BoundarySpec::Kind::DWBC1, 5)),
                  std::domain_error);
  // wrong boundary for a good matrix
  CHECK_THROWS_AS(from_apm(refdata::example_apm(4),
                           BoundarySpec::square(BoundarySpec::Kind::DWBC1, 6)),
                  std::domain_error);
  // size mismatch
  CHECK_THROWS_AS(from_apm(refdata::example_apm(1),
                           BoundarySpec::square(BoundarySpec::Kind::DWBC1, 4)),
                  std::invalid_argument);
}

TEST_CASE("symmetry classes and predicates") {
  ApmMatrix zero(3);
  auto cls = symmetry_class(zero);
  CHECK(cls.count(ApmSymmetry::SAPM) == 1);
  CHECK(cls.count(ApmSymmetry::TCAPM) == 1);
  CHECK(cls.count(ApmSymmetry::HTAPM) == 1);

  CHECK(count_symmetry(BoundarySpec::Kind::DWBC1, 3, ApmSymmetry::SAPM) == 13);
  CHECK(count_symmetry(BoundarySpec::Kind::DWBC3, 4, ApmSymmetry::SAPM) == 135);
  CHECK(count_symmetry(BoundarySpec::Kind::DWBC1, 4, ApmSymmetry::TCAPM) == 28);
  CHECK(count_symmetry(BoundarySpec::Kind::DWBC2, 4, ApmSymmetry::TCAPM) == 28);
  CHECK(count_symmetry(BoundarySpec::Kind::DWBC4, 3, ApmSymmetry::HTAPM) == 7);
  CHECK_THROWS_AS(count_symmetry(BoundarySpec::Kind::DWBC3, 2, ApmSymmetry::TCAPM),
                  std::invalid_argument);
  CHECK_THROWS_AS(count_symmetry(BoundarySpec::Kind::DWBC1, 2, ApmSymmetry::HTAPM),
                  std::invalid_argument);
}

TEST_CASE("q-deformed bell numbers") {
  CHECK(q_bell(0, Int(2)) == 1);
  CHECK(q_bell(4, Int(2)) == 28);
  CHECK(q_bell(5, Int(2)) == 204);
  CHECK(q_binomial(4, 0, Int(2)) == 1);
  CHECK(q_binomial(4, 1, Int(2)) == 15);
  CHECK(q_binomial(4, 2, Int(2)) == 35);
  CHECK(q_binomial(4, 3, Int(2)) == 15);
  CHECK(q_binomial(4, 4, Int(2)) == 1);
  // plain binomials at q = 1
  CHECK(q_binomial(5, 2, Int(1)) == 10);
}
