#pragma once

// Exact verification of the refined correspondence between the 20V boundary
// statistics and the square-grid model with weights (1, sqrt2, 1): the
// substitution identity, the coefficient-wise binomial relations, and the
// corollary form.  Everything is compared in tau-polynomials over the
// order-2 cyclotomic field.

#include <string>
#include <vector>

#include "ice20v/count20v.hpp"
#include "ice20v/cyclotomic.hpp"
#include "ice20v/kagome.hpp"  // CheckResult
#include "ice20v/poly.hpp"
#include "ice20v/sixv.hpp"

namespace ice20v {

using PolyC = Poly<Cyclotomic>;

inline PolyC poly_z_to_cyclotomic(const PolyZ& p, int k) {
  std::vector<Cyclotomic> cs;
  cs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) cs.push_back(Cyclotomic::from_rat(k, Rat(c)));
  return PolyC(std::move(cs));
}

// p(q(tau)) by Horner composition.
inline PolyC poly_compose(const PolyC& p, const PolyC& q, const Cyclotomic& like) {
  PolyC acc;
  for (std::size_t i = p.coeffs().size(); i-- > 0;)
    acc = acc * q + PolyC::constant(p.coeffs()[i]);
  (void)like;
  return acc;
}

struct RefinementReport {
  int n = 0;
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

inline RefinementReport verify_refinement_theorem(int n) {
  RefinementReport rep;
  rep.n = n;
  const int k = 2;
  Cyclotomic one = Cyclotomic::from_rat(k, Rat(1));
  Cyclotomic half = Cyclotomic::from_rat(k, Rat(1, 2));

  PolyC z1 = poly_z_to_cyclotomic(count_20v_refined(BoundarySpec::Kind::DWBC1, n), k);
  PolyC z2 = poly_z_to_cyclotomic(count_20v_refined(BoundarySpec::Kind::DWBC2, n), k);
  PolyC z6 = count_6v_combinatorial_refined(std::size_t(n));

  // (i) substitution sigma = (1 + tau)/2
  PolyC half_shift({half, half});  // (1 + tau)/2
  PolyC z6_sub = poly_compose(z6, half_shift, one);
  {
    bool ok = (z2 == z6_sub);
    rep.checks.push_back({"substitution", ok, false,
                          ok ? "" : "lhs " + z2.to_string() + " rhs " + z6_sub.to_string()});
  }

  // (ii) coefficient-wise binomial relations
  auto coeff6 = [&](int m) {  // Z_{;m}
    return (std::size_t(m - 1) < z6.coeffs().size()) ? z6.coeffs()[std::size_t(m - 1)]
                                                     : Cyclotomic(k);
  };
  auto coeff_poly = [&](const PolyC& p, int l) {
    return (std::size_t(l - 1) < p.coeffs().size()) ? p.coeffs()[std::size_t(l - 1)]
                                                    : Cyclotomic(k);
  };
  {
    bool ok = (coeff_poly(z1, 1) == coeff6(1));
    rep.checks.push_back({"binomial-bc1-l1", ok, false, ""});
  }
  for (int l = 2; l <= n; ++l) {
    Cyclotomic sum(k);
    for (int m = l; m <= n; ++m) {
      Int binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m - 2),
                   static_cast<unsigned long>(l - 2));
      Rat f(binom, Int(1) << (m - 2));
      sum += Cyclotomic::from_rat(k, f) * coeff6(m);
    }
    bool ok = (coeff_poly(z1, l) == sum);
    rep.checks.push_back({"binomial-bc1-l" + std::to_string(l), ok, false,
                          ok ? "" : "lhs " + coeff_poly(z1, l).to_string() + " rhs " +
                                        sum.to_string()});
  }
  for (int l = 1; l <= n; ++l) {
    Cyclotomic sum(k);
    for (int m = l; m <= n; ++m) {
      Int binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m - 1),
                   static_cast<unsigned long>(l - 1));
      Rat f(binom, Int(1) << (m - 1));
      sum += Cyclotomic::from_rat(k, f) * coeff6(m);
    }
    bool ok = (coeff_poly(z2, l) == sum);
    rep.checks.push_back({"binomial-bc2-l" + std::to_string(l), ok, false, ""});
  }

  // (iii) corollary: (1+tau) Zhat1(tau) = 2 tau Zhat6((1+tau)/2) + (1-tau) Zhat6(0)
  {
    PolyC one_plus({one, one});
    PolyC one_minus({one, -one});
    PolyC two_tau({Cyclotomic(k), Cyclotomic::from_rat(k, Rat(2))});
    PolyC lhs = one_plus * z1;
    PolyC rhs = two_tau * z6_sub + one_minus * PolyC::constant(coeff6(1));
    bool ok = (lhs == rhs);
    rep.checks.push_back({"corollary", ok, false,
                          ok ? "" : "lhs " + lhs.to_string() + " rhs " + rhs.to_string()});
  }
  return rep;
}

// The staggered-grid reduction identities: partition function on the doubled
// grid equals 2^(n^2) times the corresponding count for each of the three
// boundary variants.
inline std::vector<CheckResult> staggered_checks(std::size_t n) {
  struct Var {
    StaggeredVariant v;
    BoundarySpec::Kind kind;
    const char* id;
  };
  const Var vars[] = {{StaggeredVariant::WS, BoundarySpec::Kind::DWBC3, "ws"},
                      {StaggeredVariant::WSEN, BoundarySpec::Kind::DWBC4, "wsen"},
                      {StaggeredVariant::DWBC, BoundarySpec::Kind::DWBC1, "dwbc"}};
  std::vector<CheckResult> out;
  for (const auto& var : vars) {
    Cyclotomic z = count_staggered_6v(n, var.v);
    Int expect = count_20v(var.kind, int(n)) << (n * n);
    bool ok = z.is_rational() && z.rational_part() == Rat(expect);
    out.push_back({std::string("staggered-") + var.id + "-n" + std::to_string(n), ok, false,
                   ok ? "" : "value " + z.to_string() + " expected " + expect.get_str()});
  }
  return out;
}

}  // namespace ice20v
