#pragma once

// Integers a + b*w with w^2 + w + 1 = 0.  Holds phase-matrix entries, which
// stay in {0, +-1, +-w, +-w^2}, and their row/column/diagonal sums.

#include <cstdint>
#include <string>

namespace ice20v {

struct Eisenstein {
  long a = 0;  // rational unit coordinate
  long b = 0;  // omega coordinate

  constexpr Eisenstein() = default;
  constexpr Eisenstein(long a_, long b_) : a(a_), b(b_) {}

  static constexpr Eisenstein omega() { return {0, 1}; }
  static constexpr Eisenstein omega2() { return {-1, -1}; }  // w^2 = -1 - w

  constexpr bool is_zero() const { return a == 0 && b == 0; }

  constexpr Eisenstein operator-() const { return {-a, -b}; }

  friend constexpr Eisenstein operator+(Eisenstein x, Eisenstein y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend constexpr Eisenstein operator-(Eisenstein x, Eisenstein y) {
    return {x.a - y.a, x.b - y.b};
  }
  // (a+bw)(c+dw) = ac + (ad+bc)w + bd(-1-w)
  friend constexpr Eisenstein operator*(Eisenstein x, Eisenstein y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
  }
  friend constexpr bool operator==(Eisenstein x, Eisenstein y) {
    return x.a == y.a && x.b == y.b;
  }
  friend constexpr bool operator!=(Eisenstein x, Eisenstein y) { return !(x == y); }

  Eisenstein& operator+=(Eisenstein y) { return *this = *this + y; }

  // complex conjugation swaps w and w^2: a + b*w^2 = (a-b) - b*w
  constexpr Eisenstein conj() const { return {a - b, -b}; }

  // multiples of w^2 are t*w^2 = (-t, -t); multiples of w are (0, t)
  constexpr bool in_omega2_Z() const { return a == b; }
  constexpr bool in_omega_Z() const { return a == 0; }
  constexpr bool in_Z() const { return b == 0; }

  std::string to_string() const {
    if (is_zero()) return "0";
    if (b == 0) return std::to_string(a);
    if (a == 0) return (b == 1 ? "w" : b == -1 ? "-w" : std::to_string(b) + "w");
    if (a == b) return (a == -1 ? "w2" : a == 1 ? "-w2" : std::to_string(-a) + "w2");
    return std::to_string(a) + (b > 0 ? "+" : "") + std::to_string(b) + "w";
  }
};

}  // namespace ice20v
