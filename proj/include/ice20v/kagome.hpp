#pragma once

// Weight-system checks for the Kagome decomposition of the triangular-lattice
// ice model.  Three layers:
//  (1) the ten product relations that give every 20V vertex weight 1, for the
//      sublattice triples (1, s2, 1), (s2, 1, 1), (s2, 1, 1) normalized by
//      the common 1/2 prefactor, exactly in Q(sqrt 2);
//  (2) the three unravelling relations for the same triples;
//  (3) the unravelling relations as identities of Laurent polynomials in
//      (Z, W, T, q) for the spectral parametrization with z = Z^2, w = W^2,
//      t = T^2, which turns every square root into a monomial.
// Deliberately broken weights are re-checked as negative controls so a
// vacuously-true pass cannot slip through.

#include <array>
#include <string>
#include <vector>

#include "ice20v/cyclotomic.hpp"
#include "ice20v/laurent.hpp"
#include "ice20v/rings.hpp"

namespace ice20v {

struct CheckResult {
  std::string id;
  bool pass = false;
  bool expected_fail = false;  // negative control: pass means "failed as it should"
  std::string detail;
};

struct KagomeReport {
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace kagdetail {

struct Triples {
  Cyclotomic a1, b1, c1, a2, b2, c2, a3, b3, c3;
};

inline Triples combinatorial_triples() {
  Cyclotomic one = Cyclotomic::from_rat(2, Rat(1));
  Cyclotomic s2 = Cyclotomic::sqrt2(2);
  return {one, s2, one, s2, one, one, s2, one, one};
}

struct SymbolicWeights {
  LaurentQ a1, b1, c1, a2, b2, c2, a3, b3, c3;
};

inline SymbolicWeights integrable_weights() {
  const std::vector<std::string> vars = {"Z", "W", "T", "q"};
  auto mono = [&](long cz, long cw, long ct, long cq) {
    return LaurentQ::monomial(vars, Rat(1),
                              {std::int32_t(cz), std::int32_t(cw), std::int32_t(ct),
                               std::int32_t(cq)});
  };
  LaurentQ Z2 = mono(2, 0, 0, 0), W2 = mono(0, 2, 0, 0), T2 = mono(0, 0, 2, 0);
  LaurentQ cfac = mono(0, 0, 0, 2) - mono(0, 0, 0, -2);  // q^2 - q^-2
  SymbolicWeights w{
      /*a1*/ Z2 - W2,
      /*b1*/ mono(2, 0, 0, -2) - mono(0, 2, 0, 2),
      /*c1*/ cfac * mono(1, 1, 0, 0),
      /*a2*/ mono(2, 0, 0, 1) - mono(0, 0, 2, -1),
      /*b2*/ mono(2, 0, 0, -1) - mono(0, 0, 2, 1),
      /*c2*/ cfac * mono(1, 0, 1, 0),
      /*a3*/ mono(0, 0, 2, 1) - mono(0, 2, 0, -1),
      /*b3*/ mono(0, 0, 2, -1) - mono(0, 2, 0, 1),
      /*c3*/ cfac * mono(0, 1, 1, 0)};
  return w;
}

template <class S>
std::array<S, 3> yang_baxter_residuals(const S& a1, const S& b1, const S& c1, const S& a2,
                                       const S& b2, const S& c2, const S& a3, const S& b3,
                                       const S& c3) {
  return {(a1 * b2 - b1 * a2) * c3 + c1 * c2 * b3,
          (a1 * b3 - b1 * a3) * c2 + c1 * c3 * b2,
          (b2 * b3 - a2 * a3) * c1 + c2 * c3 * a1};
}

}  // namespace kagdetail

inline KagomeReport verify_kagome() {
  KagomeReport rep;
  auto t = kagdetail::combinatorial_triples();
  Cyclotomic two = Cyclotomic::from_rat(2, Rat(2));

  // the ten weight-1 relations, each product of three sublattice weights
  // summing to 2 (the normalization constant)
  struct Rel {
    const char* id;
    Cyclotomic lhs;
  };
  const Rel rels[] = {
      {"a1*a2*a3", t.a1 * t.a2 * t.a3},
      {"b1*a2*b3", t.b1 * t.a2 * t.b3},
      {"b1*a2*c3", t.b1 * t.a2 * t.c3},
      {"c1*a2*a3", t.c1 * t.a2 * t.a3},
      {"b1*c2*a3", t.b1 * t.c2 * t.a3},
      {"b1*b2*a3", t.b1 * t.b2 * t.a3},
      {"a1*b2*c3+c1*c2*b3", t.a1 * t.b2 * t.c3 + t.c1 * t.c2 * t.b3},
      {"a1*b2*b3+c1*c2*c3", t.a1 * t.b2 * t.b3 + t.c1 * t.c2 * t.c3},
      {"c1*b2*b3+a1*c2*c3", t.c1 * t.b2 * t.b3 + t.a1 * t.c2 * t.c3},
      {"c1*b2*c3+a1*c2*b3", t.c1 * t.b2 * t.c3 + t.a1 * t.c2 * t.b3},
  };
  for (const auto& r : rels) {
    bool ok = (r.lhs == two);
    rep.checks.push_back({std::string("weight-relation ") + r.id, ok, false,
                          ok ? "" : "value " + r.lhs.to_string()});
  }

  // unravelling relations for the combinatorial triples
  auto res = kagdetail::yang_baxter_residuals(t.a1, t.b1, t.c1, t.a2, t.b2, t.c2, t.a3, t.b3,
                                              t.c3);
  for (int i = 0; i < 3; ++i) {
    bool ok = res[i].is_zero();
    rep.checks.push_back({"yb-combinatorial-" + std::to_string(i + 1), ok, false,
                          ok ? "" : "residual " + res[i].to_string()});
  }

  // symbolic identities in (Z, W, T, q)
  auto w = kagdetail::integrable_weights();
  auto sres = kagdetail::yang_baxter_residuals(w.a1, w.b1, w.c1, w.a2, w.b2, w.c2, w.a3, w.b3,
                                               w.c3);
  for (int i = 0; i < 3; ++i) {
    bool ok = sres[i].is_zero();
    rep.checks.push_back({"yb-symbolic-" + std::to_string(i + 1), ok, false,
                          ok ? "" : "residual " + sres[i].to_string()});
  }

  // negative controls: b1 -> b1 + 1 must break the first relation both ways
  {
    Cyclotomic one = Cyclotomic::from_rat(2, Rat(1));
    auto bad = kagdetail::yang_baxter_residuals(t.a1, t.b1 + one, t.c1, t.a2, t.b2, t.c2, t.a3,
                                                t.b3, t.c3);
    bool failed = !bad[0].is_zero();
    rep.checks.push_back({"yb-negative-control-combinatorial", failed, true,
                          failed ? "residual " + bad[0].to_string() : "unexpectedly zero"});
  }
  {
    LaurentQ one = LaurentQ::constant({"Z", "W", "T", "q"}, Rat(1));
    auto bad = kagdetail::yang_baxter_residuals(w.a1, w.b1 + one, w.c1, w.a2, w.b2, w.c2, w.a3,
                                                w.b3, w.c3);
    bool failed = !bad[0].is_zero();
    rep.checks.push_back({"yb-negative-control-symbolic", failed, true,
                          failed ? "residual " + bad[0].to_string() : "unexpectedly zero"});
  }
  return rep;
}

}  // namespace ice20v
