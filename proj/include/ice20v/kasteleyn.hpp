#pragma once

// Closed-form count of domino tilings of the 2n x 2n square,
//   prod_{i,j=1..n} ( 4 cos^2(i pi/(2n+1)) + 4 cos^2(j pi/(2n+1)) ),
// evaluated in high-precision floating point and rounded to an integer.
// This is the only floating-point computation in the library; it is guarded
// by a relative rounding-residue bound and cross-checked against the exact
// matching oracle and the triangle determinants.

#include <mpfr.h>

#include <stdexcept>
#include <string>

#include "ice20v/region.hpp"
#include "ice20v/rings.hpp"
#include "ice20v/schroder.hpp"

namespace ice20v {

struct KasteleynResult {
  Int value;
  double relative_residue;
};

inline KasteleynResult kasteleyn_square_raw(std::size_t n) {
  if (n < 1 || n > 12) throw std::invalid_argument("kasteleyn_square: 1 <= n <= 12");
  const mpfr_prec_t prec = 768;
  mpfr_t pi, angle, c, prod, term, rounded, resid;
  mpfr_inits2(prec, pi, angle, c, prod, term, rounded, resid, (mpfr_ptr) nullptr);
  mpfr_const_pi(pi, MPFR_RNDN);

  // cos2[i] = 4 cos^2(i pi / (2n+1))
  mpfr_t* cos2 = new mpfr_t[n + 1];
  for (std::size_t i = 1; i <= n; ++i) {
    mpfr_init2(cos2[i], prec);
    mpfr_mul_ui(angle, pi, static_cast<unsigned long>(i), MPFR_RNDN);
    mpfr_div_ui(angle, angle, static_cast<unsigned long>(2 * n + 1), MPFR_RNDN);
    mpfr_cos(c, angle, MPFR_RNDN);
    mpfr_sqr(c, c, MPFR_RNDN);
    mpfr_mul_ui(cos2[i], c, 4, MPFR_RNDN);
  }

  mpfr_set_ui(prod, 1, MPFR_RNDN);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      mpfr_add(term, cos2[i], cos2[j], MPFR_RNDN);
      mpfr_mul(prod, prod, term, MPFR_RNDN);
    }

  Int z;
  mpfr_get_z(z.get_mpz_t(), prod, MPFR_RNDN);
  mpfr_set_z(rounded, z.get_mpz_t(), MPFR_RNDN);
  mpfr_sub(resid, prod, rounded, MPFR_RNDN);
  mpfr_abs(resid, resid, MPFR_RNDN);
  mpfr_div(resid, resid, prod, MPFR_RNDN);
  double rel = mpfr_get_d(resid, MPFR_RNDN);

  for (std::size_t i = 1; i <= n; ++i) mpfr_clear(cos2[i]);
  delete[] cos2;
  mpfr_clears(pi, angle, c, prod, term, rounded, resid, (mpfr_ptr) nullptr);

  if (rel > 1e-6) throw std::domain_error("kasteleyn rounding residue too large");
  return {z, rel};
}

// Rounded product with the built-in cross-checks: the matching oracle for
// n <= 4 and 2^n b_n^2 for n <= 8.
inline Int kasteleyn_square(std::size_t n) {
  KasteleynResult r = kasteleyn_square_raw(n);
  if (n <= 4) {
    Int oracle = domino_matchings(square_region(n));
    if (r.value != oracle) throw std::logic_error("kasteleyn vs matching oracle mismatch");
  }
  if (n <= 8) {
    Int b = triangle_count(n);
    Int expect = (Int(1) << n) * b * b;
    if (r.value != expect) throw std::logic_error("kasteleyn vs triangle determinant mismatch");
  }
  return r.value;
}

}  // namespace ice20v
