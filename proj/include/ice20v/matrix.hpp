#pragma once

// Dense matrices over one exact scalar ring.  det_exact runs ordinary
// elimination with exact division over fields and Bareiss fraction-free
// elimination over integral domains, so polynomial matrices never leave
// their ring.

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ice20v/rings.hpp"

namespace ice20v {

template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), e_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const T& like) {
    Matrix m(n, n, ring_zero_like(like));
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring_one_like(like);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& at(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return e_[i * cols_ + j];
  }
  const T& at(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return e_[i * cols_ + j];
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  Matrix submatrix(const std::vector<std::size_t>& ri,
                   const std::vector<std::size_t>& ci) const {
    Matrix s(ri.size(), ci.size(), ring_zero_like(e_[0]));
    for (std::size_t i = 0; i < ri.size(); ++i)
      for (std::size_t j = 0; j < ci.size(); ++j) s.at(i, j) = at(ri[i], ci[j]);
    return s;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> e_;
};

namespace detail {

template <class T>
T det_field(Matrix<T> m) {
  std::size_t n = m.rows();
  T det = ring_one_like(m.at(0, 0));
  bool neg = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && ring_is_zero(m.at(piv, k))) ++piv;
    if (piv == n) return ring_zero_like(det);
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      neg = !neg;
    }
    det = det * m.at(k, k);
    T inv_pivot = ring_divexact(ring_one_like(det), m.at(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (ring_is_zero(m.at(i, k))) continue;
      T f = m.at(i, k) * inv_pivot;
      for (std::size_t j = k; j < n; ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(k, j);
    }
  }
  return neg ? -det : det;
}

template <class T>
T det_bareiss(Matrix<T> m) {
  std::size_t n = m.rows();
  T prev = ring_one_like(m.at(0, 0));
  bool neg = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && ring_is_zero(m.at(piv, k))) ++piv;
    if (piv == n) return ring_zero_like(prev);
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      neg = !neg;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = ring_divexact(num, prev);
      }
      m.at(i, k) = ring_zero_like(prev);
    }
    prev = m.at(k, k);
  }
  T d = m.at(n - 1, n - 1);
  return neg ? -d : d;
}

}  // namespace detail

template <class T>
T det_exact(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
  if (m.rows() == 0) throw std::invalid_argument("det of empty matrix");
  if constexpr (RingIsField<T>::value)
    return detail::det_field(m);
  else
    return detail::det_bareiss(m);
}

// Sum of det(M[S,S]) over all row/column subsets S, the empty one
// contributing 1.  Explicit enumeration, so only sensible for small n.
template <class T>
T sum_principal_minors(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("principal minors of non-square matrix");
  std::size_t n = m.rows();
  if (n > 20) throw std::invalid_argument("principal minor enumeration too large");
  T total = ring_one_like(m.at(0, 0));
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) idx.push_back(i);
    total = total + det_exact(m.submatrix(idx, idx));
  }
  return total;
}

}  // namespace ice20v
