#pragma once

// Triangular-lattice grid in path-occupancy convention: the grid is an
// R-row x C-column block of vertices (x, y), x = 1..C left to right,
// y = 1..R bottom to top, with horizontal, vertical and second-diagonal
// edges.  An edge is occupied iff its arrow matches the natural direction
// (W->E for horizontals, N->S for verticals, NW->SE for diagonals), so the
// ice rule at a vertex reads: occupied in-edges among {W, N, NW} equal
// occupied out-edges among {E, S, SE}.
//
// Edge addressing:
//   H(x, y), x = 0..C, y = 1..R   between (x, y) and (x+1, y)
//   V(x, y), x = 1..C, y = 0..R   between (x, y) and (x, y+1)
//   D(x, y), x = 0..C, y = 0..R   between (x, y+1) and (x+1, y)
// x = 0 / x = C / y = 0 / y = R touch the boundary prescription.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ice20v {

struct VertexEnvironment {
  bool w_in = false, n_in = false, nw_in = false;
  bool e_out = false, s_out = false, se_out = false;

  int in_count() const { return int(w_in) + int(n_in) + int(nw_in); }
  int out_count() const { return int(e_out) + int(s_out) + int(se_out); }
  bool valid() const { return in_count() == out_count(); }

  int bits() const {
    return int(w_in) | int(n_in) << 1 | int(nw_in) << 2 | int(e_out) << 3 |
           int(s_out) << 4 | int(se_out) << 5;
  }
};

struct VertexClass {
  bool valid = false;
  int vertex_id = 0;  // 1..20 over valid environments, 0 otherwise
};

// Canonical id: rank of the environment's 6-bit pattern among the 20 valid
// patterns in increasing order.
inline VertexClass classify_vertex(const VertexEnvironment& env) {
  if (!env.valid()) return {false, 0};
  int id = 1;
  for (int b = 0; b < env.bits(); ++b) {
    VertexEnvironment e;
    e.w_in = b & 1;
    e.n_in = b >> 1 & 1;
    e.nw_in = b >> 2 & 1;
    e.e_out = b >> 3 & 1;
    e.s_out = b >> 4 & 1;
    e.se_out = b >> 5 & 1;
    if (e.valid()) ++id;
  }
  return {true, id};
}

struct BoundarySpec {
  enum class Kind { DWBC1, DWBC2, DWBC3, DWBC4, PENTAGON, RECT4, SQUARE6V };
  Kind kind = Kind::DWBC1;
  int n = 1;          // grid size for the square kinds, path count for PENTAGON
  int k = 0;          // PENTAGON vacancies
  int a = 0, b = 0, c = 0;  // RECT4 parameters

  static BoundarySpec square(Kind kind, int n) {
    BoundarySpec s;
    s.kind = kind;
    s.n = n;
    return s;
  }
  static BoundarySpec pentagon(int n, int k) {
    BoundarySpec s;
    s.kind = Kind::PENTAGON;
    s.n = n;
    s.k = k;
    return s;
  }
  static BoundarySpec rect4(int a, int b, int c) {
    BoundarySpec s;
    s.kind = Kind::RECT4;
    s.a = a;
    s.b = b;
    s.c = c;
    return s;
  }

  std::string label() const {
    switch (kind) {
      case Kind::DWBC1: return "DWBC1";
      case Kind::DWBC2: return "DWBC2";
      case Kind::DWBC3: return "DWBC3";
      case Kind::DWBC4: return "DWBC4";
      case Kind::PENTAGON:
        return "PENTAGON(" + std::to_string(n) + "," + std::to_string(k) + ")";
      case Kind::RECT4:
        return "RECT4(" + std::to_string(a) + "," + std::to_string(b) + "," +
               std::to_string(c) + ")";
      case Kind::SQUARE6V: return "SQUARE6V";
    }
    return "?";
  }
};

// Fully explicit per-edge boundary prescription.
struct BoundaryData {
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint8_t> west_h;   // [rows]    H(0, y),   y = 1..R
  std::vector<std::uint8_t> west_d;   // [rows]    D(0, y),   y = 1..R (y = R: NW corner)
  std::vector<std::uint8_t> north_v;  // [cols]    V(x, R),   x = 1..C
  std::vector<std::uint8_t> north_d;  // [cols-1]  D(x, R),   x = 1..C-1
  std::vector<std::uint8_t> south_v;  // [cols]    V(x, 0),   x = 1..C
  std::vector<std::uint8_t> south_d;  // [cols]    D(x, 0),   x = 1..C (x = C: SE corner)
  std::vector<std::uint8_t> east_h;   // [rows]    H(C, y),   y = 1..R
  std::vector<std::uint8_t> east_d;   // [rows-1]  D(C, y),   y = 1..R-1
  std::string kind;
};

inline BoundaryData make_boundary(const BoundarySpec& spec) {
  using Kind = BoundarySpec::Kind;
  BoundaryData B;
  B.kind = spec.label();
  std::size_t R = 0, C = 0;
  switch (spec.kind) {
    case Kind::DWBC1:
    case Kind::DWBC2:
    case Kind::DWBC3:
    case Kind::DWBC4:
      R = C = std::size_t(spec.n);
      break;
    case Kind::PENTAGON:
      R = std::size_t(spec.n + spec.k);
      C = std::size_t(spec.n);
      break;
    case Kind::RECT4:
      R = std::size_t(spec.a + spec.b + 1);
      C = std::size_t(spec.b + spec.c + 1);
      break;
    case Kind::SQUARE6V:
      throw std::invalid_argument("SQUARE6V boundary belongs to the 6V engine");
  }
  if (R == 0 || C == 0) throw std::invalid_argument("empty grid");
  B.rows = R;
  B.cols = C;
  B.west_h.assign(R, 0);
  B.west_d.assign(R, 0);
  B.north_v.assign(C, 0);
  B.north_d.assign(C ? C - 1 : 0, 0);
  B.south_v.assign(C, 0);
  B.south_d.assign(C, 0);
  B.east_h.assign(R, 0);
  B.east_d.assign(R ? R - 1 : 0, 0);

  switch (spec.kind) {
    case Kind::DWBC1:
    case Kind::DWBC2:
      // Paths enter on all W horizontals and W diagonals, exit on all S
      // verticals and S diagonals; the two corner diagonals are occupied for
      // DWBC1 and empty for DWBC2.
      for (std::size_t y = 1; y <= R; ++y) B.west_h[y - 1] = 1;
      for (std::size_t y = 1; y < R; ++y) B.west_d[y - 1] = 1;
      for (std::size_t x = 1; x <= C; ++x) B.south_v[x - 1] = 1;
      for (std::size_t x = 1; x < C; ++x) B.south_d[x - 1] = 1;
      if (spec.kind == Kind::DWBC1) {
        B.west_d[R - 1] = 1;   // NW corner
        B.south_d[C - 1] = 1;  // SE corner
      }
      break;
    case Kind::DWBC3:
      for (std::size_t y = 1; y <= R; ++y) B.west_h[y - 1] = 1;
      for (std::size_t x = 1; x <= C; ++x) B.south_v[x - 1] = 1;
      break;
    case Kind::DWBC4:
      for (std::size_t y = 1; y <= R; ++y) {
        B.west_h[y - 1] = 1;
        B.east_h[y - 1] = 1;
      }
      for (std::size_t x = 1; x <= C; ++x) {
        B.south_v[x - 1] = 1;
        B.north_v[x - 1] = 1;
      }
      break;
    case Kind::PENTAGON:
      // n occupied W horizontals at the top, k vacancies below.
      for (std::size_t y = std::size_t(spec.k) + 1; y <= R; ++y) B.west_h[y - 1] = 1;
      for (std::size_t x = 1; x <= C; ++x) B.south_v[x - 1] = 1;
      break;
    case Kind::RECT4:
      // All verticals occupied; W horizontals occupied on the top a+1 rows,
      // E horizontals on the bottom a+1 rows.
      for (std::size_t x = 1; x <= C; ++x) {
        B.south_v[x - 1] = 1;
        B.north_v[x - 1] = 1;
      }
      for (std::size_t y = std::size_t(spec.b) + 1; y <= R; ++y) B.west_h[y - 1] = 1;
      for (std::size_t y = 1; y <= std::size_t(spec.a) + 1; ++y) B.east_h[y - 1] = 1;
      break;
    case Kind::SQUARE6V:
      break;
  }
  return B;
}

// Transpose + complement: swap axes and flip every occupancy.  Maps valid
// configurations bijectively onto valid configurations of the transformed
// boundary; used to keep the DP frontier on the short grid side.
inline BoundaryData transpose_complement(const BoundaryData& B) {
  std::size_t R = B.cols, C = B.rows;  // new dimensions
  BoundaryData T;
  T.rows = R;
  T.cols = C;
  T.kind = B.kind + "^tc";
  T.west_h.assign(R, 0);
  T.west_d.assign(R, 0);
  T.north_v.assign(C, 0);
  T.north_d.assign(C ? C - 1 : 0, 0);
  T.south_v.assign(C, 0);
  T.south_d.assign(C, 0);
  T.east_h.assign(R, 0);
  T.east_d.assign(R ? R - 1 : 0, 0);
  for (std::size_t y = 1; y <= R; ++y) {
    T.west_h[y - 1] = 1 - B.south_v[y - 1];  // H'(0,y) <- V(y,0)
    T.west_d[y - 1] = 1 - B.south_d[y - 1];  // D'(0,y) <- D(y,0)
  }
  for (std::size_t x = 1; x <= C; ++x) {
    T.south_v[x - 1] = 1 - B.west_h[x - 1];  // V'(x,0) <- H(0,x)
    T.south_d[x - 1] = 1 - B.west_d[x - 1];  // D'(x,0) <- D(0,x)
    T.north_v[x - 1] = 1 - B.east_h[x - 1];  // V'(x,R') <- H(C,x)
  }
  for (std::size_t x = 1; x < C; ++x)
    T.north_d[x - 1] = 1 - B.east_d[x - 1];  // D'(x,R') <- D(C,x)
  for (std::size_t y = 1; y < R; ++y)
    T.east_d[y - 1] = 1 - B.north_d[y - 1];  // D'(C',y) <- D(y,R)
  for (std::size_t y = 1; y <= R; ++y)
    T.east_h[y - 1] = 1 - B.north_v[y - 1];  // H'(C',y) <- V(y,R)
  return T;
}

class LatticeConfig {
 public:
  LatticeConfig() = default;
  LatticeConfig(std::size_t rows, std::size_t cols, std::string boundary)
      : rows_(rows),
        cols_(cols),
        boundary_(std::move(boundary)),
        h_((cols + 1) * rows, 0),
        v_(cols * (rows + 1), 0),
        d_((cols + 1) * (rows + 1), 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::string& boundary() const { return boundary_; }
  void set_boundary(std::string b) { boundary_ = std::move(b); }

  // H(x, y): x = 0..C, y = 1..R
  std::uint8_t h(std::size_t x, std::size_t y) const { return h_[x * rows_ + (y - 1)]; }
  void set_h(std::size_t x, std::size_t y, bool b) { h_[x * rows_ + (y - 1)] = b; }
  // V(x, y): x = 1..C, y = 0..R
  std::uint8_t v(std::size_t x, std::size_t y) const { return v_[(x - 1) * (rows_ + 1) + y]; }
  void set_v(std::size_t x, std::size_t y, bool b) { v_[(x - 1) * (rows_ + 1) + y] = b; }
  // D(x, y): x = 0..C, y = 0..R
  std::uint8_t d(std::size_t x, std::size_t y) const { return d_[x * (rows_ + 1) + y]; }
  void set_d(std::size_t x, std::size_t y, bool b) { d_[x * (rows_ + 1) + y] = b; }

  VertexEnvironment env(std::size_t x, std::size_t y) const {
    VertexEnvironment e;
    e.w_in = h(x - 1, y);
    e.e_out = h(x, y);
    e.n_in = v(x, y);
    e.s_out = v(x, y - 1);
    e.nw_in = d(x - 1, y);
    e.se_out = d(x, y - 1);
    return e;
  }

  bool ice_rule_holds() const {
    for (std::size_t x = 1; x <= cols_; ++x)
      for (std::size_t y = 1; y <= rows_; ++y)
        if (!env(x, y).valid()) return false;
    return true;
  }

  bool matches_boundary(const BoundaryData& B) const {
    if (B.rows != rows_ || B.cols != cols_) return false;
    for (std::size_t y = 1; y <= rows_; ++y) {
      if (h(0, y) != B.west_h[y - 1]) return false;
      if (h(cols_, y) != B.east_h[y - 1]) return false;
      if (d(0, y) != B.west_d[y - 1]) return false;
      if (y < rows_ && d(cols_, y) != B.east_d[y - 1]) return false;
    }
    for (std::size_t x = 1; x <= cols_; ++x) {
      if (v(x, 0) != B.south_v[x - 1]) return false;
      if (v(x, rows_) != B.north_v[x - 1]) return false;
      if (d(x, 0) != B.south_d[x - 1]) return false;
      if (x < cols_ && d(x, rows_) != B.north_d[x - 1]) return false;
    }
    return true;
  }

  // Image under complement + 180-degree rotation (the DWBC1 <-> DWBC2 map).
  LatticeConfig rotate180_complement() const {
    LatticeConfig out(rows_, cols_, boundary_ + "~rot");
    std::size_t R = rows_, C = cols_;
    for (std::size_t x = 0; x <= C; ++x)
      for (std::size_t y = 1; y <= R; ++y) out.set_h(x, y, !h(C - x, R + 1 - y));
    for (std::size_t x = 1; x <= C; ++x)
      for (std::size_t y = 0; y <= R; ++y) out.set_v(x, y, !v(C + 1 - x, R - y));
    for (std::size_t x = 0; x <= C; ++x)
      for (std::size_t y = 0; y <= R; ++y) out.set_d(x, y, !d(C - x, R - y));
    // D(0,0) and D(C,R) touch no vertex; keep them zero so equal
    // configurations serialize identically
    out.set_d(0, 0, false);
    out.set_d(C, R, false);
    return out;
  }

  friend bool operator==(const LatticeConfig& a, const LatticeConfig& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.h_ == b.h_ && a.v_ == b.v_ &&
           a.d_ == b.d_;
  }

  const std::vector<std::uint8_t>& h_bits() const { return h_; }
  const std::vector<std::uint8_t>& v_bits() const { return v_; }
  const std::vector<std::uint8_t>& d_bits() const { return d_; }
  std::vector<std::uint8_t>& h_bits() { return h_; }
  std::vector<std::uint8_t>& v_bits() { return v_; }
  std::vector<std::uint8_t>& d_bits() { return d_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::string boundary_;
  std::vector<std::uint8_t> h_, v_, d_;
};

}  // namespace ice20v
