#pragma once

// Matrix builders behind the determinant identities: the quarter-turn tiling
// matrix I + theta*M (entries from the restricted Schroder generating
// function), its tau-refined variants, and the homogeneous-limit determinant
// of the partition function with its exact prefactor.  All indices are
// 0-based in (i, j); builders that come from 1-based r^(i-1) s^(j-1)
// extractions shift accordingly.

#include <cstddef>
#include <stdexcept>
#include <utility>

#include "ice20v/cyclotomic.hpp"
#include "ice20v/matrix.hpp"
#include "ice20v/poly.hpp"
#include "ice20v/rings.hpp"
#include "ice20v/series.hpp"

namespace ice20v {

// 1/(1 - r - s - rs): Schroder paths by endpoint.
template <class R>
RationalGF<R> schroder_gf(const R& like) {
  R one = ring_one_like(like);
  return RationalGF<R>(BiPoly<R>::constant(one),
                       bipoly<R>(like, {{one, 0, 0}, {-one, 1, 0}, {-one, 0, 1}, {-one, 1, 1}}));
}

// 2r/((1-r)(1-r-s-rs)): entry (i, j) is the restricted path count with a
// forbidden final up step, shifted so that (i, j) holds the count to height
// j+1.
template <class R>
RationalGF<R> restricted_schroder_gf(const R& like) {
  R one = ring_one_like(like);
  R two = one + one;
  BiPoly<R> num = bipoly<R>(like, {{two, 1, 0}});
  BiPoly<R> one_minus_r = bipoly<R>(like, {{one, 0, 0}, {-one, 1, 0}});
  BiPoly<R> kernel = bipoly<R>(like, {{one, 0, 0}, {-one, 1, 0}, {-one, 0, 1}, {-one, 1, 1}});
  return RationalGF<R>(num, one_minus_r * kernel);
}

inline CoeffTable<Int> restricted_schroder_table(std::size_t max_i, std::size_t max_j) {
  return restricted_schroder_gf<Int>(Int(1)).coeff_table(max_i, max_j);
}

// I_n + theta * M_n with (M_n)_{i,j} the restricted count to height j+1.
template <class R>
Matrix<R> build_t4_matrix(std::size_t n, const R& theta) {
  if (n < 1) throw std::invalid_argument("build_t4_matrix: n >= 1");
  CoeffTable<Int> t = restricted_schroder_table(n - 1, n - 1);
  R zero = ring_zero_like(theta);
  Matrix<R> m(n, n, zero);
  R one = ring_one_like(theta);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      R e = theta * ring_from_int(theta, t.at(i, j));
      if (i == j) e = e + one;
      m.at(i, j) = e;
    }
  return m;
}

inline Matrix<Int> build_t4_matrix(std::size_t n) { return build_t4_matrix<Int>(n, Int(1)); }

// Refined variant over Z[tau]: columns 0..n-2 as above, last column from
//   type 1:  2 tau r / ((1 - tau r)(1 - r - s - rs))
//   type 2:  (1 + tau) r / ((1 - tau r)(1 - r - s - rs))
inline Matrix<PolyZ> build_refined_t4_matrix(std::size_t n, int type) {
  if (n < 1) throw std::invalid_argument("build_refined_t4_matrix: n >= 1");
  if (type != 1 && type != 2) throw std::invalid_argument("refined type must be 1 or 2");
  PolyZ one = PolyZ::constant(Int(1));
  PolyZ tau = PolyZ::monomial(Int(1), 1);
  PolyZ num_factor = (type == 1) ? tau + tau : one + tau;

  BiPoly<PolyZ> num = bipoly<PolyZ>(one, {{num_factor, 1, 0}});
  BiPoly<PolyZ> one_minus_tau_r = bipoly<PolyZ>(one, {{one, 0, 0}, {-tau, 1, 0}});
  BiPoly<PolyZ> kernel =
      bipoly<PolyZ>(one, {{one, 0, 0}, {-one, 1, 0}, {-one, 0, 1}, {-one, 1, 1}});
  RationalGF<PolyZ> last(num, one_minus_tau_r * kernel);
  CoeffTable<PolyZ> lt = last.coeff_table(n - 1, n - 1);

  CoeffTable<Int> t = restricted_schroder_table(n - 1, n - 1);
  Matrix<PolyZ> m(n, n, PolyZ());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      PolyZ e = (j + 1 == n) ? lt.at(i, n - 1) : PolyZ::constant(t.at(i, j));
      if (i == j) e += one;
      m.at(i, j) = e;
    }
  }
  return m;
}

// --- homogeneous-limit determinant of the DWBC partition function -----------
//
// Entries are coefficients of r^(i-1) s^(j-1) in
//   1/((z+r)-(w+s)) - 1/((z+r)-q^4(w+s)),  z = (1+i)/2, w = (i-1)/2, q^4 = i,
// over the Gaussian rationals.  The scalar prefactor lives in the order-2
// cyclotomic field (it needs sqrt 2) and is kept separate from the matrix;
// prefactor * det is the integer partition function.

struct IkDeterminant {
  Matrix<Cyclotomic> matrix;    // order_log 1 entries
  Cyclotomic prefactor;         // order_log 2
};

namespace ikdetail {

inline Cyclotomic g_z() { return Cyclotomic::gaussian(Rat(1, 2), Rat(1, 2)); }
inline Cyclotomic g_w() { return Cyclotomic::gaussian(Rat(-1, 2), Rat(1, 2)); }

inline RationalGF<Cyclotomic> bulk_kernel() {
  Cyclotomic z = g_z(), w = g_w();
  Cyclotomic one = ring_one_like(z);
  Cyclotomic i = Cyclotomic::imag_unit(1);
  // 1/((z-w) + r - s) - 1/((z - i w) + r - i s)
  RationalGF<Cyclotomic> f1(BiPoly<Cyclotomic>::constant(one),
                            bipoly<Cyclotomic>(z, {{z - w, 0, 0}, {one, 1, 0}, {-one, 0, 1}}));
  RationalGF<Cyclotomic> f2(BiPoly<Cyclotomic>::constant(one),
                            bipoly<Cyclotomic>(z, {{z - i * w, 0, 0}, {one, 1, 0}, {-i, 0, 1}}));
  return f1 - f2;
}

// q^2 = zeta, q^-2 = zeta^-1, q^4 = i in the order-2 field; sqrt(zw) on the
// branch that makes the c-weight (q^2 - q^-2) sqrt(zw) equal +1.
struct Consts {
  Cyclotomic q2 = Cyclotomic::zeta_pow(2, 1);
  Cyclotomic qm2 = Cyclotomic::zeta_pow(2, -1);
  Cyclotomic q4 = Cyclotomic::zeta_pow(2, 2);
  Cyclotomic z = g_z().promote(2);
  Cyclotomic w = g_w().promote(2);
  Cyclotomic sqrt_zw = Cyclotomic(2, {Rat(0), Rat(-1, 2), Rat(0), Rat(-1, 2)});  // -i/sqrt2
  Cyclotomic one = Cyclotomic::from_rat(2, Rat(1));

  Cyclotomic c_weight() const { return (q2 - qm2) * sqrt_zw; }
  Cyclotomic ab_weight(const Cyclotomic& wv) const { return (z - wv) * (qm2 * z - q2 * wv); }
  Cyclotomic column_factor(const Cyclotomic& wv) const {
    return ring_divexact(q2, (one - q4) * wv);  // q^2 / ((1 - q^4) w)
  }
};

inline Cyclotomic sign_factor(std::size_t n) {
  bool neg = ((n * (n - 1) / 2) % 2) != 0;
  Cyclotomic s = Cyclotomic::from_rat(2, Rat(neg ? -1 : 1));
  return s;
}

}  // namespace ikdetail

inline IkDeterminant build_ik_matrix(std::size_t n) {
  if (n < 1) throw std::invalid_argument("build_ik_matrix: n >= 1");
  CoeffTable<Cyclotomic> t = ikdetail::bulk_kernel().coeff_table(n - 1, n - 1);
  Matrix<Cyclotomic> m(n, n, Cyclotomic(1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = t.at(i, j);

  ikdetail::Consts C;
  Cyclotomic pref = ikdetail::sign_factor(n);
  pref = pref * C.c_weight().pow(long(n));
  pref = pref * C.ab_weight(C.w).pow(long(n) * long(n));
  pref = pref * C.column_factor(C.w).pow(long(n));
  return {std::move(m), pref};
}

// prefactor * det as an exact integer.
inline Int ik_partition_value(std::size_t n) {
  IkDeterminant ik = build_ik_matrix(n);
  Cyclotomic val = ik.prefactor * det_exact(ik.matrix).promote(2);
  if (!val.is_rational()) throw std::domain_error("partition value not rational");
  Rat r = val.rational_part();
  if (r.get_den() != 1) throw std::domain_error("partition value not integral");
  return r.get_num();
}

// u-deformed variant: the spectral parameter of the last column is scaled by
// u = v^2 with rational v, keeping every scalar in the Gaussian rationals /
// order-2 field.  u = 1 needs the unrefined builder (the (wu - w) factor in
// the prefactor vanishes); v = 0 is rejected.
inline IkDeterminant build_ik_refined_matrix(std::size_t n, const Rat& v) {
  if (n < 1) throw std::invalid_argument("build_ik_refined_matrix: n >= 1");
  if (sgn(v) == 0) throw std::invalid_argument("build_ik_refined_matrix: v = 0");
  Rat u = v * v;
  if (u == 1) throw std::invalid_argument("u = 1 requires the unrefined builder");

  CoeffTable<Cyclotomic> t =
      n >= 2 ? ikdetail::bulk_kernel().coeff_table(n - 1, n - 2)
             : CoeffTable<Cyclotomic>{0, 0, {Cyclotomic(1)}};
  Matrix<Cyclotomic> m(n, n, Cyclotomic(1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) m.at(i, j) = t.at(i, j);

  // last column: coefficient of r^(i-1) in 1/(c1 + r) - 1/(c2 + r),
  // c1 = z - w u, c2 = z - q^4 w u; [r^m] 1/(c+r) = (-1)^m / c^(m+1).
  Cyclotomic z = ikdetail::g_z(), w = ikdetail::g_w();
  Cyclotomic i_unit = Cyclotomic::imag_unit(1);
  Cyclotomic uu = Cyclotomic::from_rat(1, u);
  Cyclotomic c1 = z - w * uu;
  Cyclotomic c2 = z - i_unit * w * uu;
  Cyclotomic inv1 = c1.inverse(), inv2 = c2.inverse();
  Cyclotomic p1 = inv1, p2 = inv2;
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, n - 1) = p1 - p2;
    p1 = -(p1 * inv1);
    p2 = -(p2 * inv2);
  }

  ikdetail::Consts C;
  Cyclotomic wu = C.w * Cyclotomic::from_rat(2, u);
  Cyclotomic pref = ikdetail::sign_factor(n);
  pref = pref * C.c_weight().pow(long(n) - 1);
  pref = pref * C.ab_weight(C.w).pow(long(n) * (long(n) - 1));
  pref = pref * C.column_factor(C.w).pow(long(n) - 1);
  pref = pref * C.c_weight() * Cyclotomic::from_rat(2, v);  // c-factor of the last column
  pref = pref * C.ab_weight(wu).pow(long(n));
  pref = pref * C.column_factor(wu);
  pref = pref * (wu - C.w).inverse().pow(long(n) - 1);
  return {std::move(m), pref};
}

inline Cyclotomic ik_refined_value(std::size_t n, const Rat& v) {
  IkDeterminant ik = build_ik_refined_matrix(n, v);
  return ik.prefactor * det_exact(ik.matrix).promote(2);
}

}  // namespace ice20v
