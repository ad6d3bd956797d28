#pragma once

// Exact enumeration of 20V configurations by a west-to-east frontier DP.
// Vertices are processed column by column, top row down.  The frontier
// profile packs, per row: the horizontal edge crossing into the next unswept
// column, the diagonal edge entering the current column (consumed top-down),
// the diagonal edge produced toward the next column, plus the single pending
// vertical bit inside the current column.  Weights are any commutative ring
// (big integers for plain counts, tau-polynomials for the refined statistic);
// big-integer addition commutes, so accumulation order never matters.
//
// East/south constraints are enforced locally at the last column / bottom
// row, so every surviving state is accepted.

#include <cassert>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "ice20v/lattice.hpp"
#include "ice20v/poly.hpp"
#include "ice20v/rings.hpp"

namespace ice20v {

namespace dp20v {

using State = std::uint64_t;

struct Layout {
  std::size_t R = 0;
  // bits [0,R): h per row; [R, 2R-1): d-in rows 1..R-1;
  // [2R-1, 3R-2): d-out rows 1..R-1; bit 3R-2: pending vertical
  State h_bit(std::size_t y) const { return State(1) << (y - 1); }
  State din_bit(std::size_t y) const { return State(1) << (R + y - 1); }    // y < R
  State dout_bit(std::size_t y) const { return State(1) << (2 * R - 1 + y - 1); }  // y < R
  State v_bit() const { return State(1) << (3 * R - 2); }

  State initial(const BoundaryData& B) const {
    State s = 0;
    for (std::size_t y = 1; y <= R; ++y)
      if (B.west_h[y - 1]) s |= h_bit(y);
    for (std::size_t y = 1; y < R; ++y)
      if (B.west_d[y - 1]) s |= din_bit(y);
    return s;
  }

  // Move the produced diagonals into the consumed slots for the next column.
  State column_shift(State s) const {
    State din_mask = ((State(1) << (R - 1)) - 1) << R;
    State keep = s & ((State(1) << R) - 1);  // h bits only
    State dout = (s >> (2 * R - 1)) & ((State(1) << (R - 1)) - 1);
    (void)din_mask;
    return keep | (dout << R);
  }
};

// The three input bits of vertex (x, j) under state s.
struct Inputs {
  bool w, n, nw;
  int count() const { return int(w) + int(n) + int(nw); }
};

inline Inputs inputs_at(const Layout& L, const BoundaryData& B, State s, std::size_t x,
                        std::size_t j) {
  Inputs in;
  in.w = s & L.h_bit(j);
  in.n = (j == L.R) ? bool(B.north_v[x - 1]) : bool(s & L.v_bit());
  if (j == L.R)
    in.nw = (x == 1) ? bool(B.west_d[L.R - 1]) : bool(B.north_d[x - 2]);
  else
    in.nw = s & L.din_bit(j);
  return in;
}

// Enumerate output triples (E, S, SE) consistent with the ice rule and the
// local boundary constraints; calls fn(e, s_out, se, next_state).  The order
// of combos (by the 3-bit code E<<2|S<<1|SE) fixes the lexicographic
// enumeration order.
template <class Fn>
void for_each_choice(const Layout& L, const BoundaryData& B, State s, std::size_t x,
                     std::size_t j, Fn&& fn) {
  Inputs in = inputs_at(L, B, s, x, j);
  int k = in.count();
  bool last_col = (x == B.cols);
  for (int code = 0; code < 8; ++code) {
    bool e = code >> 2 & 1, so = code >> 1 & 1, se = code & 1;
    if (int(e) + int(so) + int(se) != k) continue;
    if (last_col && e != bool(B.east_h[j - 1])) continue;
    if (j == 1) {
      if (so != bool(B.south_v[x - 1])) continue;
      if (se != bool(B.south_d[x - 1])) continue;
    } else if (last_col && se != bool(B.east_d[j - 2])) {
      continue;
    }
    State t = s;
    t = e ? (t | L.h_bit(j)) : (t & ~L.h_bit(j));
    if (j < L.R) t &= ~L.din_bit(j);
    if (j > 1) {
      t = so ? (t | L.v_bit()) : (t & ~L.v_bit());
      t = se ? (t | L.dout_bit(j - 1)) : (t & ~L.dout_bit(j - 1));
    } else {
      t &= ~L.v_bit();
      if (x < B.cols) t = L.column_shift(t);
    }
    fn(e, so, se, t);
  }
}

}  // namespace dp20v

// Weighted count; aw(w, x, j, in_w, in_n, in_nw, e, s, se) multiplies the
// running weight in place.
template <class W, class ApplyWeight>
W count_20v_weighted(const BoundaryData& B, const W& zero, const W& one, ApplyWeight&& aw) {
  if (B.rows > 16) throw std::invalid_argument("grid too tall for the frontier profile");
  dp20v::Layout L{B.rows};
  std::unordered_map<dp20v::State, W> cur;
  cur.emplace(L.initial(B), one);
  for (std::size_t x = 1; x <= B.cols; ++x) {
    for (std::size_t j = B.rows; j >= 1; --j) {
      std::unordered_map<dp20v::State, W> next;
      next.reserve(cur.size() * 2);
      for (const auto& [s, w] : cur) {
        dp20v::Inputs in = dp20v::inputs_at(L, B, s, x, j);
        dp20v::for_each_choice(L, B, s, x, j,
                               [&](bool e, bool so, bool se, dp20v::State t) {
                                 W nw = w;
                                 aw(nw, x, j, in.w, in.n, in.nw, e, so, se);
                                 auto it = next.find(t);
                                 if (it == next.end())
                                   next.emplace(t, std::move(nw));
                                 else
                                   it->second += nw;
                               });
      }
      cur = std::move(next);
      if (j == 1) break;
    }
  }
  W total = zero;
  for (const auto& [s, w] : cur) total += w;
  return total;
}

inline Int count_20v(const BoundaryData& B0) {
  BoundaryData B = (B0.rows > B0.cols) ? transpose_complement(B0) : B0;
  return count_20v_weighted<Int>(B, Int(0), Int(1),
                                 [](Int&, std::size_t, std::size_t, bool, bool, bool, bool,
                                    bool, bool) {});
}

inline Int count_20v(const BoundarySpec& spec) { return count_20v(make_boundary(spec)); }

inline Int count_20v(BoundarySpec::Kind kind, int n) {
  return count_20v(BoundarySpec::square(kind, n));
}

// Generating polynomial sum_l Z_l tau^(l-1); the exponent counts occupied
// inner vertical edges in the last column.
inline PolyZ count_20v_refined(BoundarySpec::Kind kind, int n) {
  if (kind != BoundarySpec::Kind::DWBC1 && kind != BoundarySpec::Kind::DWBC2)
    throw std::invalid_argument("refined count defined for DWBC1/DWBC2");
  BoundaryData B = make_boundary(BoundarySpec::square(kind, n));
  PolyZ tau = PolyZ::monomial(Int(1), 1);
  return count_20v_weighted<PolyZ>(
      B, PolyZ(), PolyZ::constant(Int(1)),
      [&](PolyZ& w, std::size_t x, std::size_t j, bool, bool, bool, bool, bool so, bool) {
        if (x == B.cols && j >= 2 && so) w *= tau;
      });
}

inline Int count_rect_dwbc4(int a, int b, int c) {
  return count_20v(BoundarySpec::rect4(a, b, c));
}

inline Int count_pentagon(int n, int k) {
  return count_20v(BoundarySpec::pentagon(n, k));
}

// --- enumeration -------------------------------------------------------------

inline LatticeConfig config_from_boundary(const BoundaryData& B) {
  LatticeConfig c(B.rows, B.cols, B.kind);
  for (std::size_t y = 1; y <= B.rows; ++y) {
    c.set_h(0, y, B.west_h[y - 1]);
    c.set_h(B.cols, y, B.east_h[y - 1]);
    c.set_d(0, y, B.west_d[y - 1]);
    if (y < B.rows) c.set_d(B.cols, y, B.east_d[y - 1]);
  }
  for (std::size_t x = 1; x <= B.cols; ++x) {
    c.set_v(x, 0, B.south_v[x - 1]);
    c.set_v(x, B.rows, B.north_v[x - 1]);
    c.set_d(x, 0, B.south_d[x - 1]);
    if (x < B.cols) c.set_d(x, B.rows, B.north_d[x - 1]);
  }
  return c;
}

namespace dp20v {

class Enumerator {
 public:
  Enumerator(const BoundaryData& B) : B_(B), L_{B.rows} {
    if (B.rows > 16) throw std::invalid_argument("grid too tall for the frontier profile");
    total_ = B.rows * B.cols;
  }

  // fn(config) -> bool; returning false stops enumeration.  Returns true if
  // the full set was visited (no early stop).
  bool run(const std::function<bool(const LatticeConfig&)>& fn) {
    work_ = config_from_boundary(B_);
    stop_ = false;
    dfs(0, L_.initial(B_), fn);
    return !stop_;
  }

 private:
  std::size_t pos_x(std::size_t pos) const { return pos / B_.rows + 1; }
  std::size_t pos_j(std::size_t pos) const { return B_.rows - pos % B_.rows; }

  bool feasible(std::size_t pos, State s) {
    if (pos == total_) return true;
    std::uint64_t key = s | (std::uint64_t(pos) << 50);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool ok = false;
    for_each_choice(L_, B_, s, pos_x(pos), pos_j(pos),
                    [&](bool, bool, bool, State t) {
                      if (!ok && feasible(pos + 1, t)) ok = true;
                    });
    memo_.emplace(key, ok);
    return ok;
  }

  void dfs(std::size_t pos, State s, const std::function<bool(const LatticeConfig&)>& fn) {
    if (stop_) return;
    if (pos == total_) {
      if (!fn(work_)) stop_ = true;
      return;
    }
    std::size_t x = pos_x(pos), j = pos_j(pos);
    struct Choice {
      bool e, s, se;
      State t;
    };
    Choice cs[8];
    int nc = 0;
    for_each_choice(L_, B_, s, x, j, [&](bool e, bool so, bool se, State t) {
      cs[nc++] = {e, so, se, t};
    });
    for (int i = 0; i < nc && !stop_; ++i) {
      if (!feasible(pos + 1, cs[i].t)) continue;
      work_.set_h(x, j, cs[i].e);
      work_.set_v(x, j - 1, cs[i].s);
      work_.set_d(x, j - 1, cs[i].se);
      dfs(pos + 1, cs[i].t, fn);
    }
  }

  BoundaryData B_;
  Layout L_;
  std::size_t total_;
  LatticeConfig work_;
  bool stop_ = false;
  std::unordered_map<std::uint64_t, bool> memo_;
};

}  // namespace dp20v

// Deterministic (lexicographic in the per-vertex choice codes) enumeration.
// Returns true when enumeration was exhaustive, false when fn stopped it.
inline bool for_each_config(const BoundaryData& B,
                            const std::function<bool(const LatticeConfig&)>& fn) {
  dp20v::Enumerator en(B);
  return en.run(fn);
}

struct EnumerationResult {
  std::vector<LatticeConfig> configs;
  bool truncated = false;
};

inline EnumerationResult enumerate_configs(const BoundarySpec& spec, std::size_t limit) {
  EnumerationResult res;
  BoundaryData B = make_boundary(spec);
  res.truncated = !for_each_config(B, [&](const LatticeConfig& c) {
    if (res.configs.size() >= limit) return false;
    res.configs.push_back(c);
    return true;
  });
  return res;
}

}  // namespace ice20v
