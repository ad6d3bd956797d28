#pragma once

// Schroder path counting in the two coordinate systems used by the tiling
// determinants:
//  - restricted paths run from (i, 0) to (0, j) with steps (-1,0), (0,1),
//    (-1,1) and a final step that cannot be up;
//  - strip paths run from (0, a) to (M, b) with steps (1,1), (1,-1), (2,0),
//    confined to 0 <= y <= L.
// restricted_schroder is the independent oracle for the generating-function
// coefficient tables, so it deliberately stays a plain position DP.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "ice20v/builders.hpp"
#include "ice20v/matrix.hpp"
#include "ice20v/poly.hpp"
#include "ice20v/rings.hpp"

namespace ice20v {

// Unrestricted count from (i, 0) to (0, j).
inline Int schroder_count(long i, long j) {
  if (i < 0 || j < 0) return 0;
  std::vector<std::vector<Int>> N(std::size_t(i) + 1, std::vector<Int>(std::size_t(j) + 1, 0));
  N[0][0] = 1;
  for (long x = 0; x <= i; ++x)
    for (long y = 0; y <= j; ++y) {
      if (x == 0 && y == 0) continue;
      Int acc = 0;
      if (x > 0) acc += N[x - 1][y];
      if (y > 0) acc += N[x][y - 1];
      if (x > 0 && y > 0) acc += N[x - 1][y - 1];
      N[std::size_t(x)][std::size_t(y)] = acc;
    }
  return N[std::size_t(i)][std::size_t(j)];
}

// Last step left or diagonal, never up.
inline Int restricted_schroder(long i, long j) {
  if (i < 0 || j < 0) return 0;
  if (i == 0) return j == 0 ? 1 : 0;
  return schroder_count(i - 1, j) + schroder_count(i - 1, j - 1);
}

// Memoized S^(L)_{a,b}(M) via the step recursion
//   S(M) = S_{a,b}(M-2) + S_{a-1,b}(M-1) + S_{a+1,b}(M-1),
// with S_{a,b}(0) = delta_{a,b} inside the strip.
class StripSchroderTable {
 public:
  explicit StripSchroderTable(int L) : L_(L) {
    if (L < 0) throw std::invalid_argument("strip height must be >= 0");
  }

  int strip_height() const { return L_; }

  Int value(int a, int b, int M) {
    if (a < 0 || a > L_ || b < 0 || b > L_) return 0;
    if (M < 0) return 0;
    if (M == 0) return a == b ? 1 : 0;
    std::uint64_t key = pack(a, b, M);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Int r = value(a, b, M - 2) + value(a - 1, b, M - 1) + value(a + 1, b, M - 1);
    memo_.emplace(key, r);
    return r;
  }

 private:
  static std::uint64_t pack(int a, int b, int M) {
    return (std::uint64_t(std::uint16_t(a)) << 48) | (std::uint64_t(std::uint16_t(b)) << 32) |
           std::uint32_t(M);
  }

  int L_;
  std::unordered_map<std::uint64_t, Int> memo_;
};

inline Int strip_schroder(int a, int b, int L, int M) {
  StripSchroderTable t(L);
  return t.value(a, b, M);
}

// det(I + theta M_n): quarter-turn symmetric tiling count at theta = 1.
template <class R>
R t4_count(std::size_t n, const R& theta) {
  return det_exact(build_t4_matrix<R>(n, theta));
}

inline Int t4_count(std::size_t n) { return t4_count<Int>(n, Int(1)); }

inline PolyZ t4_refined(std::size_t n, int type) {
  return det_exact(build_refined_t4_matrix(n, type));
}

// Triangle tiling count via both strip determinants; the two determinant forms
// must agree.
inline Int triangle_count(std::size_t n) {
  if (n < 1) throw std::invalid_argument("triangle_count: n >= 1");
  StripSchroderTable strip(int(2 * n - 1));
  Matrix<Int> mb(n, n, Int(0)), mc(n, n, Int(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      mb.at(i, j) = strip.value(int(2 * i), int(2 * j), int(2 * j));
      mc.at(i, j) = strip.value(int(2 * i), int(2 * j + 1), int(2 * j + 1));
    }
  Int db = det_exact(mb), dc = det_exact(mc);
  if (db != dc) throw std::logic_error("triangle determinant forms disagree");
  return db;
}

// Raised-strip variant; constant in k for k >= n-1.
inline Int extended_triangle_count(std::size_t n, int k) {
  if (n < 1) throw std::invalid_argument("extended_triangle_count: n >= 1");
  if (k < 0) throw std::invalid_argument("extended_triangle_count: k >= 0");
  StripSchroderTable strip(int(2 * n - 1) + k);
  Matrix<Int> m(n, n, Int(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = strip.value(int(2 * i), int(2 * j + 1), int(2 * j + 1));
  return det_exact(m);
}

// Conjectured single-path values N_{a,b,1} = S^(b+1)_{1,b}(2a+b+1) and
// N_{0,b,c} = S^(b)_{0,b}(2c+b); nullopt outside those planes.
inline std::optional<Int> conjectured_nabc(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("negative index");
  if (c == 1) return strip_schroder(1, b, b + 1, 2 * a + b + 1);
  if (a == 0) return strip_schroder(0, b, b, 2 * c + b);
  return std::nullopt;
}

}  // namespace ice20v
