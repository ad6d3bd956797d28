#pragma once

// Elements of Q(zeta) where zeta is a primitive 2^(k+1)-th root of unity,
// stored as rational coordinate vectors of length m = 2^k modulo
// zeta^m = -1.  k=1 gives the Gaussian rationals (i = zeta), k=2 adjoins
// sqrt(2) = zeta - zeta^3, k=3 contains the primitive 16th root used by the
// integrable weight parametrization.
//
// Values are immutable after construction; mixed-order arithmetic is a usage
// error except through promote().

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ice20v/rings.hpp"

namespace ice20v {

class Cyclotomic {
 public:
  Cyclotomic() : k_(1), c_(2, Rat(0)) {}

  explicit Cyclotomic(int k) : k_(k), c_(std::size_t(1) << k, Rat(0)) {
    if (k < 1 || k > 6) throw std::invalid_argument("cyclotomic order out of range");
  }

  Cyclotomic(int k, std::vector<Rat> coeffs) : k_(k), c_(std::move(coeffs)) {
    if (k < 1 || k > 6) throw std::invalid_argument("cyclotomic order out of range");
    if (c_.size() != (std::size_t(1) << k))
      throw std::invalid_argument("cyclotomic coefficient count mismatch");
  }

  static Cyclotomic from_rat(int k, const Rat& r) {
    Cyclotomic x(k);
    x.c_[0] = r;
    return x;
  }

  // zeta^e for any integer e, reduced modulo zeta^m = -1.
  static Cyclotomic zeta_pow(int k, long e) {
    Cyclotomic x(k);
    long m = 1L << k;
    long r = e % (2 * m);
    if (r < 0) r += 2 * m;
    if (r < m)
      x.c_[std::size_t(r)] = 1;
    else
      x.c_[std::size_t(r - m)] = -1;
    return x;
  }

  static Cyclotomic imag_unit(int k) {
    assert(k >= 1);
    return zeta_pow(k, 1L << (k - 1));  // zeta^(m/2) = i
  }

  // sqrt(2) = zeta_8 + zeta_8^{-1}; needs k >= 2.
  static Cyclotomic sqrt2(int k) {
    assert(k >= 2);
    long s = 1L << (k - 2);  // zeta^s = zeta_8
    return zeta_pow(k, s) + zeta_pow(k, -s);
  }

  static Cyclotomic gaussian(const Rat& re, const Rat& im) {
    Cyclotomic x(1);
    x.c_[0] = re;
    x.c_[1] = im;
    return x;
  }

  int order_log() const { return k_; }
  std::size_t dim() const { return c_.size(); }
  const Rat& coeff(std::size_t i) const { return c_[i]; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& r : c_)
      if (sgn(r) != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (sgn(c_[i]) != 0) return false;
    return true;
  }

  const Rat& rational_part() const { return c_[0]; }

  // Coefficient of sqrt(2) in the subring Q + Q*sqrt(2); requires that no
  // other basis direction is populated.
  Rat sqrt2_part() const {
    Cyclotomic s2 = sqrt2(k_);
    std::size_t pos = 0;
    for (std::size_t i = 1; i < c_.size(); ++i) {
      if (sgn(s2.c_[i]) != 0) {
        pos = i;
        break;
      }
    }
    Rat part = c_[pos] / s2.c_[pos];
    Cyclotomic rem = *this - s2 * from_rat(k_, part);
    if (!rem.is_rational())
      throw std::domain_error("value not in Q + Q*sqrt(2)");
    return part;
  }

  Cyclotomic promote(int k2) const {
    if (k2 == k_) return *this;
    if (k2 < k_) throw std::invalid_argument("promote: cannot lower order");
    Cyclotomic y(k2);
    std::size_t stride = std::size_t(1) << (k2 - k_);
    for (std::size_t i = 0; i < c_.size(); ++i) y.c_[i * stride] = c_[i];
    return y;
  }

  Cyclotomic operator-() const {
    Cyclotomic y(*this);
    for (auto& r : y.c_) r = -r;
    return y;
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    a.check(b);
    Cyclotomic y(a);
    for (std::size_t i = 0; i < y.c_.size(); ++i) y.c_[i] += b.c_[i];
    return y;
  }

  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    a.check(b);
    Cyclotomic y(a);
    for (std::size_t i = 0; i < y.c_.size(); ++i) y.c_[i] -= b.c_[i];
    return y;
  }

  // Negacyclic convolution: zeta^m = -1.
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    a.check(b);
    std::size_t m = a.c_.size();
    Cyclotomic y(a.k_);
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (sgn(b.c_[j]) == 0) continue;
        Rat t = a.c_[i] * b.c_[j];
        std::size_t e = i + j;
        if (e < m)
          y.c_[e] += t;
        else
          y.c_[e - m] -= t;
      }
    }
    return y;
  }

  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    a.check(b);
    return a.c_ == b.c_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // Multiplicative inverse: solve the m x m linear system M(x) * v = e_0
  // where M(x) is the multiplication-by-x matrix.  Always solvable for
  // nonzero x since Q(zeta) is a field.
  Cyclotomic inverse() const {
    if (is_zero()) throw std::domain_error("cyclotomic inverse of zero");
    std::size_t m = c_.size();
    // Column j of the system is x * zeta^j.
    std::vector<std::vector<Rat>> aug(m, std::vector<Rat>(m + 1, Rat(0)));
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < m; ++i) {
        std::size_t e = i + j;
        if (e < m)
          aug[e][j] += c_[i];
        else
          aug[e - m][j] -= c_[i];
      }
    }
    aug[0][m] = 1;
    for (std::size_t col = 0, row = 0; col < m; ++col, ++row) {
      std::size_t piv = row;
      while (piv < m && sgn(aug[piv][col]) == 0) ++piv;
      assert(piv < m);
      std::swap(aug[row], aug[piv]);
      Rat inv_p = Rat(1) / aug[row][col];
      for (std::size_t j2 = col; j2 <= m; ++j2) aug[row][j2] *= inv_p;
      for (std::size_t r = 0; r < m; ++r) {
        if (r == row || sgn(aug[r][col]) == 0) continue;
        Rat f = aug[r][col];
        for (std::size_t j2 = col; j2 <= m; ++j2) aug[r][j2] -= f * aug[row][j2];
      }
    }
    Cyclotomic y(k_);
    for (std::size_t i = 0; i < m; ++i) y.c_[i] = aug[i][m];
    return y;
  }

  Cyclotomic pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic acc = from_rat(k_, Rat(1));
    Cyclotomic base = *this;
    unsigned long u = static_cast<unsigned long>(e);
    while (u) {
      if (u & 1) acc *= base;
      base *= base;
      u >>= 1;
    }
    return acc;
  }

  std::string to_string() const {
    std::string s = "[k=" + std::to_string(k_) + ";";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ",";
      s += c_[i].get_str();
    }
    return s + "]";
  }

 private:
  void check(const Cyclotomic& b) const {
    if (k_ != b.k_) throw std::invalid_argument("cyclotomic order mismatch");
  }

  int k_;
  std::vector<Rat> c_;
};

template <>
struct RingIsField<Cyclotomic> {
  static constexpr bool value = true;
};

inline std::string poly_term_string(const Cyclotomic& c) { return c.to_string(); }

inline Cyclotomic ring_zero_like(const Cyclotomic& x) { return Cyclotomic(x.order_log()); }
inline Cyclotomic ring_one_like(const Cyclotomic& x) {
  return Cyclotomic::from_rat(x.order_log(), Rat(1));
}
inline bool ring_is_zero(const Cyclotomic& x) { return x.is_zero(); }
inline Cyclotomic ring_divexact(const Cyclotomic& a, const Cyclotomic& b) {
  return a * b.inverse();
}
inline Cyclotomic ring_from_int(const Cyclotomic& like, const Int& v) {
  return Cyclotomic::from_rat(like.order_log(), Rat(v));
}

}  // namespace ice20v
