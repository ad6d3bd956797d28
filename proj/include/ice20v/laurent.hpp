#pragma once

// Sparse multivariate Laurent polynomials: map from signed exponent vectors
// to coefficients, zero coefficients never stored.  Exponents are 32-bit;
// additions that would overflow abort the computation (the symbolic identity
// checks only reach |e| <= 16).

#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ice20v/rings.hpp"

namespace ice20v {

template <class R>
class Laurent {
 public:
  using Exps = std::vector<std::int32_t>;

  explicit Laurent(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static Laurent constant(std::vector<std::string> vars, const R& c) {
    Laurent y(std::move(vars));
    if (!ring_is_zero(c)) y.terms_[Exps(y.vars_.size(), 0)] = c;
    return y;
  }

  // c * prod vars[i]^e[i]
  static Laurent monomial(std::vector<std::string> vars, const R& c, Exps e) {
    Laurent y(std::move(vars));
    if (e.size() != y.vars_.size())
      throw std::invalid_argument("laurent: exponent arity mismatch");
    if (!ring_is_zero(c)) y.terms_[std::move(e)] = c;
    return y;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Laurent operator-() const {
    Laurent y(*this);
    for (auto& [e, c] : y.terms_) c = -c;
    return y;
  }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    a.check(b);
    Laurent y(a);
    for (const auto& [e, c] : b.terms_) {
      auto it = y.terms_.find(e);
      if (it == y.terms_.end()) {
        y.terms_.emplace(e, c);
      } else {
        it->second = it->second + c;
        if (ring_is_zero(it->second)) y.terms_.erase(it);
      }
    }
    return y;
  }

  friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    a.check(b);
    Laurent y(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exps e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = add_exp(ea[i], eb[i]);
        R t = ca * cb;
        auto it = y.terms_.find(e);
        if (it == y.terms_.end()) {
          if (!ring_is_zero(t)) y.terms_.emplace(std::move(e), std::move(t));
        } else {
          it->second = it->second + t;
          if (ring_is_zero(it->second)) y.terms_.erase(it);
        }
      }
    }
    return y;
  }

  Laurent& operator+=(const Laurent& b) { return *this = *this + b; }
  Laurent& operator-=(const Laurent& b) { return *this = *this - b; }
  Laurent& operator*=(const Laurent& b) { return *this = *this * b; }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    a.check(b);
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + coeff_string(c) + ")";
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        s += "*" + vars_[i];
        if (e[i] != 1) s += "^" + std::to_string(e[i]);
      }
    }
    return s;
  }

 private:
  static std::int32_t add_exp(std::int32_t a, std::int32_t b) {
    std::int64_t s = std::int64_t(a) + b;
    if (s < std::numeric_limits<std::int32_t>::min() ||
        s > std::numeric_limits<std::int32_t>::max())
      throw std::overflow_error("laurent exponent overflow");
    return static_cast<std::int32_t>(s);
  }

  static std::string coeff_string(const Int& c) { return c.get_str(); }
  static std::string coeff_string(const Rat& c) { return c.get_str(); }

  void check(const Laurent& b) const {
    if (vars_ != b.vars_) throw std::invalid_argument("laurent variable set mismatch");
  }

  std::vector<std::string> vars_;
  std::map<Exps, R> terms_;
};

template <class R>
Laurent<R> ring_zero_like(const Laurent<R>& x) {
  return Laurent<R>(x.vars());
}
template <class R>
Laurent<R> ring_one_like(const Laurent<R>& x) {
  return Laurent<R>::constant(x.vars(), ring_one_like(R{}));
}
template <class R>
bool ring_is_zero(const Laurent<R>& x) {
  return x.is_zero();
}

using LaurentQ = Laurent<Rat>;

}  // namespace ice20v
