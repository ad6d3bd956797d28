#pragma once

// Square-lattice ice model in the same path-occupancy convention as the 20V
// grid, minus the diagonals.  Vertex types, by (W-in, N-in, E-out, S-out):
//   a: (0,0,0,0) and (1,1,1,1)     empty / double osculation
//   b: (1,0,1,0) and (0,1,0,1)     straight traversal
//   c: (1,0,0,1) and (0,1,1,0)     single turn
// Domain-wall boundaries: paths enter on every W horizontal and exit on
// every S vertical.

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "ice20v/cyclotomic.hpp"
#include "ice20v/poly.hpp"
#include "ice20v/rings.hpp"

namespace ice20v {

struct SixVBoundary {
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint8_t> west_h, east_h;    // [rows]
  std::vector<std::uint8_t> north_v, south_v;  // [cols]

  static SixVBoundary dwbc(std::size_t n) {
    SixVBoundary b;
    b.rows = b.cols = n;
    b.west_h.assign(n, 1);
    b.east_h.assign(n, 0);
    b.north_v.assign(n, 0);
    b.south_v.assign(n, 1);
    return b;
  }
};

enum class SixVType { A, B, C };

inline SixVType six_vertex_type(bool w, bool n, bool e, bool s) {
  if (w == e && n == s) return (w == n) ? SixVType::A : SixVType::B;
  return SixVType::C;
}

// weight(x, y, w_in, n_in, e_out, s_out) multiplies the running weight.
template <class W, class ApplyWeight>
W count_6v_weighted(const SixVBoundary& B, const W& zero, const W& one, ApplyWeight&& aw) {
  if (B.rows > 24) throw std::invalid_argument("6V grid too tall");
  using State = std::uint64_t;
  const State vbit = State(1) << B.rows;
  std::unordered_map<State, W> cur;
  State init = 0;
  for (std::size_t y = 1; y <= B.rows; ++y)
    if (B.west_h[y - 1]) init |= State(1) << (y - 1);
  cur.emplace(init, one);
  for (std::size_t x = 1; x <= B.cols; ++x) {
    for (std::size_t j = B.rows; j >= 1; --j) {
      std::unordered_map<State, W> next;
      next.reserve(cur.size() * 2);
      for (const auto& [s, w] : cur) {
        bool w_in = s >> (j - 1) & 1;
        bool n_in = (j == B.rows) ? bool(B.north_v[x - 1]) : bool(s & vbit);
        int k = int(w_in) + int(n_in);
        for (int code = 0; code < 4; ++code) {
          bool e = code >> 1 & 1, so = code & 1;
          if (int(e) + int(so) != k) continue;
          if (x == B.cols && e != bool(B.east_h[j - 1])) continue;
          if (j == 1 && so != bool(B.south_v[x - 1])) continue;
          State t = s;
          t = e ? (t | State(1) << (j - 1)) : (t & ~(State(1) << (j - 1)));
          t = (j > 1 && so) ? (t | vbit) : (t & ~vbit);
          W nw = w;
          aw(nw, x, j, w_in, n_in, e, so);
          auto it = next.find(t);
          if (it == next.end())
            next.emplace(t, std::move(nw));
          else
            it->second += nw;
        }
      }
      cur = std::move(next);
      if (j == 1) break;
    }
  }
  W total = zero;
  for (const auto& [s, w] : cur) total += w;
  return total;
}

// Homogeneous DWBC partition function with weights (a, b, c).
template <class W>
W count_6v(std::size_t n, const W& a, const W& b, const W& c) {
  SixVBoundary B = SixVBoundary::dwbc(n);
  W one = ring_one_like(a);
  return count_6v_weighted<W>(B, ring_zero_like(a), one,
                              [&](W& w, std::size_t, std::size_t, bool wi, bool ni, bool e,
                                  bool s) {
                                switch (six_vertex_type(wi, ni, e, s)) {
                                  case SixVType::A: w = w * a; break;
                                  case SixVType::B: w = w * b; break;
                                  case SixVType::C: w = w * c; break;
                                }
                              });
}

// Refined DWBC partition function: sum_l Z_l sigma^(l-1) where l-1 counts the
// occupied inner vertical edges in the last column.
template <class W>
Poly<W> count_6v_refined(std::size_t n, const W& a, const W& b, const W& c) {
  SixVBoundary B = SixVBoundary::dwbc(n);
  Poly<W> one = Poly<W>::constant(ring_one_like(a));
  Poly<W> sigma = Poly<W>::monomial(ring_one_like(a), 1);
  return count_6v_weighted<Poly<W>>(
      B, Poly<W>(), one,
      [&](Poly<W>& w, std::size_t x, std::size_t j, bool wi, bool ni, bool e, bool s) {
        W f = a;
        switch (six_vertex_type(wi, ni, e, s)) {
          case SixVType::A: f = a; break;
          case SixVType::B: f = b; break;
          case SixVType::C: f = c; break;
        }
        w *= Poly<W>::constant(f);
        if (x == n && j >= 2 && s) w *= sigma;
      });
}

// 6V with weights (1, sqrt2, 1): integer-valued observables live in
// Q(sqrt 2) inside the order-2 cyclotomic field.
inline Cyclotomic count_6v_combinatorial(std::size_t n) {
  Cyclotomic one = Cyclotomic::from_rat(2, Rat(1));
  return count_6v<Cyclotomic>(n, one, Cyclotomic::sqrt2(2), one);
}

inline Poly<Cyclotomic> count_6v_combinatorial_refined(std::size_t n) {
  Cyclotomic one = Cyclotomic::from_rat(2, Rat(1));
  return count_6v_refined<Cyclotomic>(n, one, Cyclotomic::sqrt2(2), one);
}

// --- staggered reduction ----------------------------------------------------
//
// The 20V grid unravels onto a 2n x 2n square grid whose rows and columns
// alternate between original horizontal/vertical lines (odd index from the
// bottom-left) and deformed diagonal lines (even index); the top-right corner
// is a kissing point.  Sublattice weights, with s2 = sqrt(2):
//   (odd row, odd col)  (1, s2, 1)
//   (odd row, even col) (s2, 1, 1)
//   (even row, odd col) (s2, 1, 1)
//   (even row, even col)(1, 0, 1)   b = 0 forces transmission at kissings

enum class StaggeredVariant { WS, WSEN, DWBC };

inline SixVBoundary staggered_boundary(std::size_t n, StaggeredVariant variant) {
  std::size_t m = 2 * n;
  SixVBoundary B;
  B.rows = B.cols = m;
  B.west_h.assign(m, 0);
  B.east_h.assign(m, 0);
  B.north_v.assign(m, 0);
  B.south_v.assign(m, 0);
  for (std::size_t i = 1; i <= m; ++i) {
    bool odd = (i % 2 == 1);
    switch (variant) {
      case StaggeredVariant::WS:
        B.west_h[i - 1] = odd;
        B.south_v[i - 1] = odd;
        break;
      case StaggeredVariant::WSEN:
        B.west_h[i - 1] = odd;
        B.south_v[i - 1] = odd;
        B.east_h[i - 1] = odd;
        B.north_v[i - 1] = odd;
        break;
      case StaggeredVariant::DWBC:
        B.west_h[i - 1] = 1;
        B.south_v[i - 1] = 1;
        break;
    }
  }
  return B;
}

inline Cyclotomic count_staggered_6v(std::size_t n, StaggeredVariant variant) {
  SixVBoundary B = staggered_boundary(n, variant);
  Cyclotomic one = Cyclotomic::from_rat(2, Rat(1));
  Cyclotomic zero(2);
  Cyclotomic s2 = Cyclotomic::sqrt2(2);
  return count_6v_weighted<Cyclotomic>(
      B, zero, one,
      [&](Cyclotomic& w, std::size_t x, std::size_t y, bool wi, bool ni, bool e, bool s) {
        bool row_odd = (y % 2 == 1), col_odd = (x % 2 == 1);
        SixVType t = six_vertex_type(wi, ni, e, s);
        if (row_odd && col_odd) {
          if (t == SixVType::B) w *= s2;
        } else if (row_odd != col_odd) {
          if (t == SixVType::A) w *= s2;
        } else {
          if (t == SixVType::B) w = zero;  // kissing sublattice, b = 0
        }
      });
}

}  // namespace ice20v
