#pragma once

// Dense matrices over exact scalars (Int, Rat, Polynomial<...>).
//
// Determinants use fraction-free Bareiss elimination from size 6 upward and
// direct cofactor expansion below that; the empty 0x0 determinant is 1.
// Inertia of a symmetric rational matrix is computed by exact congruence
// reduction, so signatures are never subject to rounding.

#include "polynomial.hpp"

#include <vector>

namespace latcert {

template <class T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t rows, size_t cols, T fill = T(0))
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  T& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const T& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::domain_error("matrix product shape");
    Matrix r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k)
        for (size_t j = 0; j < b.cols_; ++j)
          r.at(i, j) += a.at(i, k) * b.at(k, j);
    return r;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    if (a.cols_ != v.size()) throw std::domain_error("matrix vector shape");
    std::vector<T> r(a.rows_, T(0));
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t j = 0; j < a.cols_; ++j) r[i] += a.at(i, j) * v[j];
    return r;
  }

  Matrix transposed() const {
    Matrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  Matrix minor_at(size_t row, size_t col) const {
    Matrix r(rows_ - 1, cols_ - 1);
    for (size_t i = 0, ri = 0; i < rows_; ++i) {
      if (i == row) continue;
      for (size_t j = 0, rj = 0; j < cols_; ++j) {
        if (j == col) continue;
        r.at(ri, rj) = at(i, j);
        ++rj;
      }
      ++ri;
    }
    return r;
  }

 private:
  size_t rows_, cols_;
  std::vector<T> a_;
};

namespace detail {

inline Int exact_div(const Int& a, const Int& b) {
  auto q = coeff_div(a, b);
  if (!q) throw std::domain_error("inexact integer division in elimination");
  return *q;
}
inline Rat exact_div(const Rat& a, const Rat& b) { return a / b; }
template <class T>
Polynomial<T> exact_div(const Polynomial<T>& a, const Polynomial<T>& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::domain_error("inexact polynomial division in elimination");
  return *q;
}

}  // namespace detail

template <class T>
T det_cofactor(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw std::domain_error("determinant of non-square");
  size_t n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m.at(0, 0);
  T acc(0);
  for (size_t j = 0; j < n; ++j) {
    if (m.at(0, j) == T(0)) continue;
    T term = m.at(0, j) * det_cofactor(m.minor_at(0, j));
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

template <class T>
T det_bareiss(Matrix<T> m) {
  if (m.rows() != m.cols()) throw std::domain_error("determinant of non-square");
  size_t n = m.rows();
  if (n == 0) return T(1);
  bool negate = false;
  T prev(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == T(0)) {
      size_t swap_row = k + 1;
      while (swap_row < n && m.at(swap_row, k) == T(0)) ++swap_row;
      if (swap_row == n) return T(0);
      for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        m.at(i, j) = detail::exact_div(
            m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j), prev);
      m.at(i, k) = T(0);
    }
    prev = m.at(k, k);
  }
  T d = m.at(n - 1, n - 1);
  return negate ? T(-d) : d;
}

template <class T>
T det(const Matrix<T>& m) {
  if (m.rows() < 6) return det_cofactor(m);
  return det_bareiss(m);
}

struct Inertia {
  int pos = 0;
  int neg = 0;
  int zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
  std::string str() const {
    return "(" + std::to_string(pos) + "," + std::to_string(neg) + "," +
           std::to_string(zero) + ")";
  }
};

// Sylvester inertia of a symmetric rational matrix by congruence reduction.
// When every remaining diagonal entry vanishes but some off-diagonal entry
// does not, adding one row and column into another restores a usable pivot.
inline Inertia inertia(Matrix<Rat> m) {
  if (m.rows() != m.cols()) throw std::domain_error("inertia of non-square");
  size_t n = m.rows();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (m.at(i, j) != m.at(j, i))
        throw std::domain_error("inertia of non-symmetric matrix");
  std::vector<size_t> active(n);
  for (size_t i = 0; i < n; ++i) active[i] = i;
  Inertia sig;
  while (!active.empty()) {
    size_t pivot = active.size();
    for (size_t ai = 0; ai < active.size(); ++ai)
      if (m.at(active[ai], active[ai]) != 0) {
        pivot = ai;
        break;
      }
    if (pivot == active.size()) {
      size_t oi = active.size(), oj = active.size();
      for (size_t ai = 0; ai < active.size() && oi == active.size(); ++ai)
        for (size_t aj = ai + 1; aj < active.size(); ++aj)
          if (m.at(active[ai], active[aj]) != 0) {
            oi = ai;
            oj = aj;
            break;
          }
      if (oi == active.size()) {
        sig.zero += static_cast<int>(active.size());
        return sig;
      }
      size_t r = active[oi], c = active[oj];
      for (size_t j = 0; j < n; ++j) m.at(r, j) += m.at(c, j);
      for (size_t i = 0; i < n; ++i) m.at(i, r) += m.at(i, c);
      continue;
    }
    size_t p = active[pivot];
    Rat d = m.at(p, p);
    if (d > 0)
      ++sig.pos;
    else
      ++sig.neg;
    for (size_t ai = 0; ai < active.size(); ++ai) {
      size_t i = active[ai];
      if (i == p || m.at(i, p) == 0) continue;
      Rat f = m.at(i, p) / d;
      for (size_t j = 0; j < n; ++j) m.at(i, j) -= f * m.at(p, j);
      for (size_t j = 0; j < n; ++j) m.at(j, i) -= f * m.at(j, p);
    }
    active.erase(active.begin() + pivot);
  }
  return sig;
}

struct LinearSolution {
  bool consistent = false;
  std::vector<Rat> particular;
  std::vector<std::vector<Rat>> nullspace;
  bool unique() const { return consistent && nullspace.empty(); }
};

// Exact Gaussian elimination for A x = b, reporting a particular solution and
// a nullspace basis when the system is consistent.
inline LinearSolution gauss_solve(Matrix<Rat> a, std::vector<Rat> b) {
  size_t rows = a.rows(), cols = a.cols();
  if (b.size() != rows) throw std::domain_error("gauss_solve shape");
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && a.at(sel, c) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r) {
      for (size_t j = 0; j < cols; ++j) std::swap(a.at(r, j), a.at(sel, j));
      std::swap(b[r], b[sel]);
    }
    Rat d = a.at(r, c);
    for (size_t j = 0; j < cols; ++j) a.at(r, j) /= d;
    b[r] /= d;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      Rat f = a.at(i, c);
      for (size_t j = 0; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  LinearSolution sol;
  for (size_t i = r; i < rows; ++i)
    if (b[i] != 0) return sol;
  sol.consistent = true;
  sol.particular.assign(cols, Rat(0));
  for (size_t i = 0; i < pivot_col.size(); ++i) sol.particular[pivot_col[i]] = b[i];
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  for (size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[c] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a.at(i, c);
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

inline size_t rank(const Matrix<Rat>& a) {
  auto sol = gauss_solve(a, std::vector<Rat>(a.rows(), Rat(0)));
  return a.cols() - sol.nullspace.size();
}

}  // namespace latcert
