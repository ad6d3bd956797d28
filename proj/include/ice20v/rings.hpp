#pragma once

// Exact scalar substrate: arbitrary-precision integers/rationals via GMP,
// plus the small trait surface the generic algorithms (determinants, series
// division, polynomial arithmetic) need from every coefficient ring.
//
// Rings with runtime shape (cyclotomic order, Laurent variable set) cannot be
// default-constructed to a compatible value, so zero/one are always derived
// from an exemplar element.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ice20v {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

// --- ring trait surface ----------------------------------------------------
//
//   ring_zero_like(x), ring_one_like(x)  shape-compatible 0 and 1
//   ring_is_zero(x)
//   ring_divexact(a, b)                  exact division, b a divisor of a
//   RingIsField<T>                       selects plain vs fraction-free
//                                        elimination in det_exact

template <class T>
struct RingIsField {
  static constexpr bool value = false;
};

template <>
struct RingIsField<Rat> {
  static constexpr bool value = true;
};

inline Int ring_zero_like(const Int&) { return Int(0); }
inline Int ring_one_like(const Int&) { return Int(1); }
inline bool ring_is_zero(const Int& x) { return sgn(x) == 0; }
inline Int ring_divexact(const Int& a, const Int& b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int ring_from_int(const Int&, const Int& v) { return v; }

inline Rat ring_zero_like(const Rat&) { return Rat(0); }
inline Rat ring_one_like(const Rat&) { return Rat(1); }
inline bool ring_is_zero(const Rat& x) { return sgn(x) == 0; }
inline Rat ring_divexact(const Rat& a, const Rat& b) { return a / b; }
inline Rat ring_from_int(const Rat&, const Int& v) { return Rat(v); }

}  // namespace ice20v
