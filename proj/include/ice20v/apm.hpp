#pragma once

// Alternating phase matrices: per-vertex reflection/transmission triples
// (h, v, d) with h + v + d = 0, their sixth-root-of-unity values
// -w*h + w^2*v, the four alternation definitions, sum rules, symmetry
// predicates, and the turning-weight decomposition along osculating paths.
//
// Matrix indices are 0-based with row 0 the TOP lattice row (y = n), matching
// the reference examples; the triple is authoritative, the Eisenstein value
// derived.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ice20v/count20v.hpp"
#include "ice20v/eisenstein.hpp"
#include "ice20v/kagome.hpp"  // CheckResult
#include "ice20v/lattice.hpp"
#include "ice20v/rings.hpp"

namespace ice20v {

struct ApmTriple {
  int h = 0, v = 0, d = 0;
  friend bool operator==(ApmTriple a, ApmTriple b) {
    return a.h == b.h && a.v == b.v && a.d == b.d;
  }
};

class ApmMatrix {
 public:
  ApmMatrix() = default;
  explicit ApmMatrix(std::size_t n) : n_(n), t_(n * n) {}

  std::size_t size() const { return n_; }

  ApmTriple& triple(std::size_t i, std::size_t j) { return t_[i * n_ + j]; }
  const ApmTriple& triple(std::size_t i, std::size_t j) const { return t_[i * n_ + j]; }

  Eisenstein value(std::size_t i, std::size_t j) const {
    const ApmTriple& t = t_[i * n_ + j];
    return Eisenstein(0, -t.h) + Eisenstein::omega2() * Eisenstein(t.v, 0);
  }

  friend bool operator==(const ApmMatrix& a, const ApmMatrix& b) {
    return a.n_ == b.n_ && a.t_ == b.t_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<ApmTriple> t_;
};

// h = W-in - E-out, v = N-in - S-out, d = NW-in - SE-out; the ice rule makes
// the triple sum vanish.
inline ApmMatrix to_apm(const LatticeConfig& c) {
  if (c.rows() != c.cols()) throw std::invalid_argument("to_apm: square grids only");
  std::size_t n = c.rows();
  if (!c.ice_rule_holds()) throw std::invalid_argument("to_apm: invalid configuration");
  ApmMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t x = j + 1, y = n - i;
      VertexEnvironment e = c.env(x, y);
      m.triple(i, j) = {int(e.w_in) - int(e.e_out), int(e.n_in) - int(e.s_out),
                        int(e.nw_in) - int(e.se_out)};
    }
  }
  return m;
}

// Inverse map: rebuild the unique edge configuration with the given boundary
// whose reflection/transmission triples equal the matrix.  Throws when the
// matrix is not realizable over that boundary.
inline LatticeConfig from_apm(const ApmMatrix& m, const BoundarySpec& spec) {
  std::size_t n = m.size();
  BoundaryData B = make_boundary(spec);
  if (B.rows != n || B.cols != n) throw std::invalid_argument("from_apm: size mismatch");
  LatticeConfig c = config_from_boundary(B);
  auto step = [](int occ, int refl) {
    int next = occ - refl;
    if (next != 0 && next != 1) throw std::domain_error("from_apm: triple not realizable");
    return next;
  };
  for (std::size_t y = 1; y <= n; ++y)  // rows, west to east
    for (std::size_t x = 1; x <= n; ++x)
      c.set_h(x, y, step(c.h(x - 1, y), m.triple(n - y, x - 1).h));
  for (std::size_t x = 1; x <= n; ++x)  // columns, north to south
    for (std::size_t y = n; y >= 1; --y)
      c.set_v(x, y - 1, step(c.v(x, y), m.triple(n - y, x - 1).v));
  // diagonals, from their north-west boundary edge toward the south-east
  for (std::size_t y0 = 1; y0 <= n; ++y0) {  // diagonals entering at D(0, y0)
    std::size_t x = 1, y = y0;
    while (x <= n && y >= 1) {
      c.set_d(x, y - 1, step(c.d(x - 1, y), m.triple(n - y, x - 1).d));
      ++x;
      --y;
    }
  }
  for (std::size_t x0 = 1; x0 < n; ++x0) {  // diagonals entering at D(x0, n)
    std::size_t x = x0 + 1, y = n;
    while (x <= n && y >= 1) {
      c.set_d(x, y - 1, step(c.d(x - 1, y), m.triple(n - y, x - 1).d));
      ++x;
      --y;
    }
  }
  if (!c.ice_rule_holds() || !c.matches_boundary(B))
    throw std::domain_error("from_apm: reconstruction violates the model");
  return c;
}

namespace apmdetail {

// Nonzero entries must alternate starting with `first`; when `last` is set
// the final nonzero entry must equal it; `required` forbids the all-zero
// sequence.
inline bool alternates(const std::vector<int>& entries, int first, std::optional<int> last,
                       bool required) {
  int expect = first;
  int prev = 0;
  bool any = false;
  for (int e : entries) {
    if (e == 0) continue;
    if (e != expect) return false;
    prev = e;
    expect = -expect;
    any = true;
  }
  if (!any) return !required;
  if (last && prev != *last) return false;
  return true;
}

template <class Get>
std::vector<int> collect(std::size_t count, Get&& get) {
  std::vector<int> v;
  v.reserve(count);
  for (std::size_t t = 0; t < count; ++t) v.push_back(get(t));
  return v;
}

}  // namespace apmdetail

// Alternation conditions for the four types.  Types 1-3 share the row and
// column rules (rows +1..+1, columns -1..-1, both nonempty) and differ in the
// diagonal rule; type 4 has its own even-flip patterns and admits the zero
// matrix.
inline bool apm_validate(const ApmMatrix& m, int type) {
  using apmdetail::alternates;
  using apmdetail::collect;
  std::size_t n = m.size();
  long ln = long(n);
  if (type < 1 || type > 4) throw std::invalid_argument("apm type must be 1..4");

  for (std::size_t i = 0; i < n; ++i) {
    auto row = collect(n, [&](std::size_t j) { return m.triple(i, j).h; });
    if (type <= 3) {
      if (!alternates(row, 1, 1, true)) return false;
    } else {
      if (!alternates(row, 1, -1, false)) return false;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    auto col = collect(n, [&](std::size_t i) { return m.triple(i, j).v; });
    if (type <= 3) {
      if (!alternates(col, -1, -1, true)) return false;
    } else {
      if (!alternates(col, 1, -1, false)) return false;
    }
  }
  for (long l = 1 - ln; l <= ln - 1; ++l) {
    std::size_t i0 = std::size_t(std::max(0L, -l));
    std::size_t len = std::size_t(ln - std::abs(l));
    auto diag = collect(len, [&](std::size_t t) {
      return m.triple(i0 + t, std::size_t(long(i0 + t) + l)).d;
    });
    bool down;  // pattern -1,...,+1 (empty-to-empty diagonal line)
    switch (type) {
      case 1: down = (l > 0); break;
      case 2: down = (l >= 0); break;
      default: down = true; break;  // types 3 and 4
    }
    if (down) {
      if (!alternates(diag, -1, 1, false)) return false;
    } else {
      if (!alternates(diag, 1, -1, false)) return false;
    }
  }
  return true;
}

struct SumRuleReport {
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

inline SumRuleReport check_sum_rules(const ApmMatrix& m, int type) {
  SumRuleReport rep;
  std::size_t n = m.size();
  long ln = long(n);
  Eisenstein total;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) total += m.value(i, j);
  if (type <= 3) {
    bool ok = (total == Eisenstein(long(n), 0));
    rep.checks.push_back({"total=n", ok, false, ok ? "" : "total " + total.to_string()});
  } else {
    bool ok = total.is_zero();
    rep.checks.push_back({"total=0", ok, false, ok ? "" : "total " + total.to_string()});
    for (std::size_t i = 0; i < n; ++i) {
      Eisenstein s;
      for (std::size_t j = 0; j < n; ++j) s += m.value(i, j);
      bool rk = s.in_omega2_Z();
      rep.checks.push_back({"row-" + std::to_string(i + 1) + " in w2*Z", rk, false,
                            rk ? "" : "sum " + s.to_string()});
    }
    for (std::size_t j = 0; j < n; ++j) {
      Eisenstein s;
      for (std::size_t i = 0; i < n; ++i) s += m.value(i, j);
      bool ck = s.in_omega_Z();
      rep.checks.push_back({"col-" + std::to_string(j + 1) + " in w*Z", ck, false,
                            ck ? "" : "sum " + s.to_string()});
    }
    for (long l = 1 - ln; l <= ln - 1; ++l) {
      Eisenstein s;
      std::size_t i0 = std::size_t(std::max(0L, -l));
      std::size_t len = std::size_t(ln - std::abs(l));
      for (std::size_t t = 0; t < len; ++t)
        s += m.value(i0 + t, std::size_t(long(i0 + t) + l));
      bool dk = s.in_Z();
      rep.checks.push_back({"diag-" + std::to_string(l) + " in Z", dk, false,
                            dk ? "" : "sum " + s.to_string()});
    }
  }
  return rep;
}

enum class ApmSymmetry { SAPM, TCAPM, HTAPM };

inline std::set<ApmSymmetry> symmetry_class(const ApmMatrix& m) {
  std::size_t n = m.size();
  std::set<ApmSymmetry> out{ApmSymmetry::SAPM, ApmSymmetry::TCAPM, ApmSymmetry::HTAPM};
  for (std::size_t i = 0; i < n && !out.empty(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Eisenstein a = m.value(i, j);
      if (out.count(ApmSymmetry::SAPM) && m.value(n - 1 - j, n - 1 - i).conj() != a)
        out.erase(ApmSymmetry::SAPM);
      if (out.count(ApmSymmetry::TCAPM) && m.value(j, i).conj() != a)
        out.erase(ApmSymmetry::TCAPM);
      if (out.count(ApmSymmetry::HTAPM) && m.value(n - 1 - i, n - 1 - j) != -a)
        out.erase(ApmSymmetry::HTAPM);
    }
  }
  return out;
}

// Enumerate configurations under the boundary and count those whose phase
// matrix satisfies the symmetry.
inline Int count_symmetry(const BoundarySpec& spec, ApmSymmetry sym) {
  using Kind = BoundarySpec::Kind;
  bool square_kind = spec.kind == Kind::DWBC1 || spec.kind == Kind::DWBC2 ||
                     spec.kind == Kind::DWBC3 || spec.kind == Kind::DWBC4;
  if (!square_kind) throw std::invalid_argument("symmetry counts need a square boundary");
  if (sym == ApmSymmetry::TCAPM && spec.kind != Kind::DWBC1 && spec.kind != Kind::DWBC2)
    throw std::invalid_argument("TCAPM applies to DWBC1/DWBC2 only");
  if (sym == ApmSymmetry::HTAPM && spec.kind != Kind::DWBC4)
    throw std::invalid_argument("HTAPM applies to DWBC4 only");
  Int count = 0;
  for_each_config(make_boundary(spec), [&](const LatticeConfig& c) {
    if (symmetry_class(to_apm(c)).count(sym)) ++count;
    return true;
  });
  return count;
}

inline Int count_symmetry(BoundarySpec::Kind kind, int n, ApmSymmetry sym) {
  return count_symmetry(BoundarySpec::square(kind, n), sym);
}

// --- turning weights ---------------------------------------------------------

// Edge potential: 0 on horizontals, -w on diagonals, 1 on verticals; a turn's
// weight is eta(out) - eta(in), so weights telescope along each path.
enum class EdgeAxis { H, D, V };

inline Eisenstein turning_eta(EdgeAxis a) {
  switch (a) {
    case EdgeAxis::H: return Eisenstein(0, 0);
    case EdgeAxis::D: return -Eisenstein::omega();
    case EdgeAxis::V: return Eisenstein(1, 0);
  }
  return {};
}

struct PathRecord {
  EdgeAxis first_axis, last_axis;
  Eisenstein total;
  std::vector<std::pair<std::size_t, std::size_t>> vertices;  // (x, y) visited
};

struct TurningProfile {
  std::vector<PathRecord> paths;
  std::vector<Eisenstein> vertex_sum;  // rows x cols, matrix order (row 0 = top)
  std::size_t n = 0;

  const Eisenstein& at(std::size_t i, std::size_t j) const { return vertex_sum[i * n + j]; }
};

namespace apmdetail {

struct EdgeRef {
  EdgeAxis axis;
  std::size_t x, y;  // H(x,y): into vertex (x+1, y); D(x,y): into (x+1, y); V(x,y): into (x, y)
};

// Non-crossing concatenation: among present in-edges ordered (N, NW, W) and
// out-edges ordered (E, SE, S), a path entering at in-rank r leaves at
// out-rank r.
inline int out_of_in(const VertexEnvironment& e, int in_slot /*0=N,1=NW,2=W*/) {
  const bool ins[3] = {e.n_in, e.nw_in, e.w_in};
  const bool outs[3] = {e.e_out, e.se_out, e.s_out};
  int rank = 0;
  for (int t = 0; t < in_slot; ++t)
    if (ins[t]) ++rank;
  for (int t = 0; t < 3; ++t) {
    if (!outs[t]) continue;
    if (rank == 0) return t;  // 0=E,1=SE,2=S
    --rank;
  }
  throw std::logic_error("osculation pairing failed");
}

}  // namespace apmdetail

inline TurningProfile turning_profile(const LatticeConfig& c) {
  if (!c.ice_rule_holds()) throw std::invalid_argument("turning_profile: invalid configuration");
  std::size_t R = c.rows(), C = c.cols();
  TurningProfile prof;
  prof.n = C;
  prof.vertex_sum.assign(R * C, Eisenstein());

  auto trace = [&](apmdetail::EdgeRef e0) {
    PathRecord rec;
    rec.first_axis = e0.axis;
    rec.total = Eisenstein();
    apmdetail::EdgeRef e = e0;
    for (;;) {
      // vertex the edge enters, or exit through the boundary
      std::size_t vx, vy;
      if (e.axis == EdgeAxis::H) {
        if (e.x == C) break;
        vx = e.x + 1;
        vy = e.y;
      } else if (e.axis == EdgeAxis::D) {
        if (e.x == C || e.y == 0) break;
        vx = e.x + 1;
        vy = e.y;
      } else {
        if (e.y == 0) break;
        vx = e.x;
        vy = e.y;
      }
      VertexEnvironment env = c.env(vx, vy);
      int in_slot = (e.axis == EdgeAxis::V) ? 0 : (e.axis == EdgeAxis::D ? 1 : 2);
      int out = apmdetail::out_of_in(env, in_slot);
      EdgeAxis out_axis = (out == 0) ? EdgeAxis::H : (out == 1 ? EdgeAxis::D : EdgeAxis::V);
      Eisenstein w = turning_eta(out_axis) - turning_eta(e.axis);
      rec.total += w;
      rec.vertices.push_back({vx, vy});
      if (R == C) prof.vertex_sum[(R - vy) * C + (vx - 1)] += w;
      if (out == 0)
        e = {EdgeAxis::H, vx, vy};
      else if (out == 1)
        e = {EdgeAxis::D, vx, vy - 1};
      else
        e = {EdgeAxis::V, vx, vy - 1};
      rec.last_axis = out_axis;
    }
    prof.paths.push_back(std::move(rec));
  };

  // start edges in canonical order: west horizontals top-down, west diagonals
  // top-down, then north verticals and diagonals left to right
  for (std::size_t y = R; y >= 1; --y) {
    if (c.h(0, y)) trace({EdgeAxis::H, 0, y});
    if (y == 1) break;
  }
  for (std::size_t y = R; y >= 1; --y) {
    if (c.d(0, y)) trace({EdgeAxis::D, 0, y});  // D(0, y) enters (1, y)
    if (y == 1) break;
  }
  for (std::size_t x = 1; x <= C; ++x)
    if (c.v(x, R)) trace({EdgeAxis::V, x, R});
  for (std::size_t x = 1; x < C; ++x)
    if (c.d(x, R)) trace({EdgeAxis::D, x, R});
  return prof;
}

// q-binomial-transform Bell numbers: B_0 = 1,
// B_{n+1} = sum_k qbinom(n, k) B_k.
inline Int q_binomial(int n, int k, const Int& q) {
  if (k < 0 || k > n) return 0;
  // Gaussian binomial via the q-Pascal recursion [n,k] = [n-1,k-1] + q^k [n-1,k]
  std::vector<Int> row(std::size_t(n) + 1);
  row[0] = 1;
  for (int r = 1; r <= n; ++r) {
    std::vector<Int> next(std::size_t(n) + 1);
    next[0] = 1;
    Int qk = 1;
    for (int c = 1; c <= r; ++c) {
      qk *= q;
      next[std::size_t(c)] = row[std::size_t(c - 1)] + qk * row[std::size_t(c)];
    }
    row = std::move(next);
  }
  return row[std::size_t(k)];
}

inline Int q_bell(int n, const Int& q) {
  if (n < 0) throw std::invalid_argument("q_bell: n >= 0");
  std::vector<Int> B(std::size_t(n) + 1);
  B[0] = 1;
  for (int m = 0; m < n; ++m) {
    Int acc = 0;
    for (int k = 0; k <= m; ++k) acc += q_binomial(m, k, q) * B[std::size_t(k)];
    B[std::size_t(m + 1)] = acc;
  }
  return B[std::size_t(n)];
}

}  // namespace ice20v
