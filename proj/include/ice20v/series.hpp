#pragma once

// Bivariate rational generating functions in (r, s) over an exact coefficient
// ring, with power-series coefficient extraction by exact series division.
// A GF is numerator/denominator with denominator(0,0) invertible, which makes
// the double series well defined; tables are computed to a requested window
// with no truncation error inside it.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ice20v/matrix.hpp"
#include "ice20v/rings.hpp"

namespace ice20v {

// Dense bivariate polynomial: coefficient of r^i s^j at (i, j).
template <class R>
class BiPoly {
 public:
  BiPoly(std::size_t deg_r, std::size_t deg_s, const R& like)
      : nr_(deg_r + 1), ns_(deg_s + 1), c_(nr_ * ns_, ring_zero_like(like)) {}

  static BiPoly constant(const R& v) {
    BiPoly p(0, 0, v);
    p.at(0, 0) = v;
    return p;
  }

  std::size_t deg_r() const { return nr_ - 1; }
  std::size_t deg_s() const { return ns_ - 1; }

  R& at(std::size_t i, std::size_t j) { return c_[i * ns_ + j]; }
  const R& at(std::size_t i, std::size_t j) const { return c_[i * ns_ + j]; }

  R coeff(std::size_t i, std::size_t j) const {
    return (i < nr_ && j < ns_) ? c_[i * ns_ + j] : ring_zero_like(c_[0]);
  }

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly y(std::max(a.deg_r(), b.deg_r()), std::max(a.deg_s(), b.deg_s()), a.c_[0]);
    for (std::size_t i = 0; i < y.nr_; ++i)
      for (std::size_t j = 0; j < y.ns_; ++j)
        y.at(i, j) = a.coeff(i, j) + b.coeff(i, j);
    return y;
  }

  friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    BiPoly y(std::max(a.deg_r(), b.deg_r()), std::max(a.deg_s(), b.deg_s()), a.c_[0]);
    for (std::size_t i = 0; i < y.nr_; ++i)
      for (std::size_t j = 0; j < y.ns_; ++j)
        y.at(i, j) = a.coeff(i, j) - b.coeff(i, j);
    return y;
  }

  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly y(a.deg_r() + b.deg_r(), a.deg_s() + b.deg_s(), a.c_[0]);
    for (std::size_t i = 0; i <= a.deg_r(); ++i)
      for (std::size_t j = 0; j <= a.deg_s(); ++j) {
        if (ring_is_zero(a.at(i, j))) continue;
        for (std::size_t k = 0; k <= b.deg_r(); ++k)
          for (std::size_t l = 0; l <= b.deg_s(); ++l)
            y.at(i + k, j + l) = y.at(i + k, j + l) + a.at(i, j) * b.at(k, l);
      }
    return y;
  }

 private:
  std::size_t nr_, ns_;
  std::vector<R> c_;
};

// Construction helper: sum of terms c * r^i * s^j.
template <class R>
struct BiTerm {
  R c;
  std::size_t i, j;
};

template <class R>
BiPoly<R> bipoly(const R& like, std::initializer_list<BiTerm<R>> terms) {
  std::size_t dr = 0, ds = 0;
  for (const auto& t : terms) {
    dr = std::max(dr, t.i);
    ds = std::max(ds, t.j);
  }
  BiPoly<R> p(dr, ds, like);
  for (const auto& t : terms) p.at(t.i, t.j) = p.at(t.i, t.j) + t.c;
  return p;
}

// Entry (i, j) holds the exact series coefficient of r^i s^j.
template <class R>
struct CoeffTable {
  std::size_t max_i, max_j;
  std::vector<R> values;  // (max_i+1) x (max_j+1), row-major

  const R& at(std::size_t i, std::size_t j) const { return values[i * (max_j + 1) + j]; }
};

template <class R>
class RationalGF {
 public:
  RationalGF(BiPoly<R> num, BiPoly<R> den) : num_(std::move(num)), den_(std::move(den)) {
    if (ring_is_zero(den_.at(0, 0)))
      throw std::invalid_argument("generating function: denominator constant term is zero");
  }

  const BiPoly<R>& num() const { return num_; }
  const BiPoly<R>& den() const { return den_; }

  friend RationalGF operator+(const RationalGF& a, const RationalGF& b) {
    return RationalGF(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalGF operator-(const RationalGF& a, const RationalGF& b) {
    return RationalGF(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }

  // c[i][j] = (num[i][j] - sum_{(a,b)!=(0,0)} den[a][b] c[i-a][j-b]) / den[0][0]
  CoeffTable<R> coeff_table(std::size_t max_i, std::size_t max_j) const {
    const R like = den_.at(0, 0);
    CoeffTable<R> t{max_i, max_j, {}};
    t.values.assign((max_i + 1) * (max_j + 1), ring_zero_like(like));
    auto cell = [&](std::size_t i, std::size_t j) -> R& {
      return t.values[i * (max_j + 1) + j];
    };
    for (std::size_t i = 0; i <= max_i; ++i) {
      for (std::size_t j = 0; j <= max_j; ++j) {
        R acc = num_.coeff(i, j);
        std::size_t ar = std::min(i, den_.deg_r());
        std::size_t as = std::min(j, den_.deg_s());
        for (std::size_t a = 0; a <= ar; ++a) {
          for (std::size_t b = 0; b <= as; ++b) {
            if (a == 0 && b == 0) continue;
            const R& d = den_.at(a, b);
            if (ring_is_zero(d)) continue;
            acc = acc - d * cell(i - a, j - b);
          }
        }
        cell(i, j) = ring_divexact(acc, den_.at(0, 0));
      }
    }
    return t;
  }

 private:
  BiPoly<R> num_, den_;
};

}  // namespace ice20v
