#pragma once

// Dense univariate polynomials over an exact coefficient ring, constant term
// first.  The zero polynomial is the empty vector; a nonzero polynomial has a
// nonzero trailing coefficient.

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ice20v/rings.hpp"

namespace ice20v {

template <class R>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static Poly constant(const R& r) {
    Poly p;
    if (!ring_is_zero(r)) p.c_.push_back(r);
    return p;
  }

  // c * x^e
  static Poly monomial(const R& c, std::size_t e) {
    Poly p;
    if (ring_is_zero(c)) return p;
    p.c_.assign(e + 1, ring_zero_like(c));
    p.c_[e] = c;
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
  const std::vector<R>& coeffs() const { return c_; }

  R coeff(std::size_t i, const R& like) const {
    return i < c_.size() ? c_[i] : ring_zero_like(like);
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Poly y;
    std::size_t n = std::max(a.c_.size(), b.c_.size());
    const R& like = a.c_[0];
    y.c_.assign(n, ring_zero_like(like));
    for (std::size_t i = 0; i < a.c_.size(); ++i) y.c_[i] = y.c_[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) y.c_[i] = y.c_[i] + b.c_[i];
    y.normalize();
    return y;
  }

  Poly operator-() const {
    Poly y(*this);
    for (auto& r : y.c_) r = -r;
    return y;
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly y;
    const R& like = a.c_[0];
    y.c_.assign(a.c_.size() + b.c_.size() - 1, ring_zero_like(like));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (ring_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        y.c_[i + j] = y.c_[i + j] + a.c_[i] * b.c_[j];
    }
    y.normalize();
    return y;
  }

  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  R eval(const R& x) const {
    R acc = ring_zero_like(x);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  // Exact quotient; throws if b does not divide *this in R[x].
  friend Poly divexact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("poly division by zero");
    if (a.is_zero()) return Poly();
    if (a.c_.size() < b.c_.size()) throw std::domain_error("poly division not exact");
    Poly rem = a;
    const R& lead = b.c_.back();
    std::size_t qn = a.c_.size() - b.c_.size() + 1;
    Poly q;
    q.c_.assign(qn, ring_zero_like(lead));
    for (std::size_t i = qn; i-- > 0;) {
      R qi = ring_divexact(rem.c_[i + b.c_.size() - 1], lead);
      q.c_[i] = qi;
      if (ring_is_zero(qi)) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        rem.c_[i + j] = rem.c_[i + j] - qi * b.c_[j];
    }
    for (const auto& r : rem.c_)
      if (!ring_is_zero(r)) throw std::domain_error("poly division not exact");
    q.normalize();
    return q;
  }

  std::string to_string(const std::string& var = "t") const;

 private:
  void normalize() {
    while (!c_.empty() && ring_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<R> c_;
};

template <class R>
Poly<R> ring_zero_like(const Poly<R>&) {
  return Poly<R>();
}

// One of the zero polynomial cannot carry coefficient shape; restrict to
// rings whose elements are shape-free.
template <class R>
Poly<R> ring_one_like(const Poly<R>& p) {
  if (!p.is_zero()) return Poly<R>::constant(ring_one_like(p.coeffs()[0]));
  return Poly<R>::constant(ring_one_like(R{}));
}

template <class R>
bool ring_is_zero(const Poly<R>& p) {
  return p.is_zero();
}

template <class R>
Poly<R> ring_divexact(const Poly<R>& a, const Poly<R>& b) {
  return divexact(a, b);
}

template <class R>
Poly<R> ring_from_int(const Poly<R>& p, const Int& v) {
  R like = p.is_zero() ? R{} : p.coeffs()[0];
  return Poly<R>::constant(ring_from_int(like, v));
}

using PolyZ = Poly<Int>;
using PolyQ = Poly<Rat>;

inline std::string poly_term_string(const Int& c) { return c.get_str(); }
inline std::string poly_term_string(const Rat& c) { return c.get_str(); }

template <class R>
std::string Poly<R>::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (ring_is_zero(c_[i])) continue;
    if (!s.empty()) s += " + ";
    s += poly_term_string(c_[i]);
    if (i >= 1) s += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return s;
}

}  // namespace ice20v
