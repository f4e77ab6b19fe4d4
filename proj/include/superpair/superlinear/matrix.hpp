#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "superpair/superlinear/scalar.hpp"

namespace superpair {

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

// Found by ADL at instantiation, so other entry types can supply is_zero later.
template <class E>
bool entry_is_zero(const E& e) {
  return is_zero(e);
}

/// Dense row-major matrix over an exact entry type (Scalar, or a ring element
/// for scalar-extension checks).
template <class E>
class BasicMatrix {
 public:
  BasicMatrix() = default;
  BasicMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  BasicMatrix(std::size_t rows, std::size_t cols, const E& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static BasicMatrix identity(std::size_t n) {
    BasicMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = E(1);
    return m;
  }

  /// Rows given as nested lists; all rows must have equal length.
  static BasicMatrix from_rows(const std::vector<std::vector<E>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    BasicMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  E& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const E& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<E> column(std::size_t j) const {
    std::vector<E> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  std::vector<E> row(std::size_t i) const {
    return std::vector<E>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  /// Row-major flattening.
  const std::vector<E>& flat() const { return data_; }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!entry_is_zero(x)) return false;
    }
    return true;
  }

  BasicMatrix transpose() const {
    BasicMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  BasicMatrix& operator+=(const BasicMatrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  BasicMatrix& operator-=(const BasicMatrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  BasicMatrix& operator*=(const E& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }
  friend BasicMatrix operator+(BasicMatrix a, const BasicMatrix& b) { return a += b; }
  friend BasicMatrix operator-(BasicMatrix a, const BasicMatrix& b) { return a -= b; }
  friend BasicMatrix operator*(BasicMatrix a, const E& s) { return a *= s; }
  friend BasicMatrix operator*(const E& s, BasicMatrix a) { return a *= s; }
  BasicMatrix operator-() const {
    BasicMatrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }

  friend BasicMatrix operator*(const BasicMatrix& a, const BasicMatrix& b) {
    if (a.cols_ != b.rows_) {
      throw std::invalid_argument("matrix product shape mismatch: " + std::to_string(a.cols_) + " vs " +
                                  std::to_string(b.rows_));
    }
    BasicMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const E& aik = a(i, k);
        if (entry_is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!entry_is_zero(b(k, j))) r(i, j) += aik * b(k, j);
        }
      }
    }
    return r;
  }

  friend std::vector<E> operator*(const BasicMatrix& a, const std::vector<E>& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<E> r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (!entry_is_zero(a(i, k)) && !entry_is_zero(v[k])) r[i] += a(i, k) * v[k];
      }
    }
    return r;
  }

  friend bool operator==(const BasicMatrix& a, const BasicMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same(const BasicMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<E> data_;
};

using Matrix = BasicMatrix<Scalar>;
using Vector = std::vector<Scalar>;

template <class E>
std::vector<E> operator+(std::vector<E> a, const std::vector<E>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class E>
std::vector<E> operator-(std::vector<E> a, const std::vector<E>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class E>
std::vector<E> scaled(std::vector<E> a, const E& s) {
  for (auto& x : a) x *= s;
  return a;
}

/// Adds s * b into a.
template <class E>
void axpy(std::vector<E>& a, const E& s, const std::vector<E>& b) {
  if (entry_is_zero(s)) return;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!entry_is_zero(b[i])) a[i] += s * b[i];
  }
}

template <class E>
bool is_zero_vector(const std::vector<E>& v) {
  for (const auto& x : v) {
    if (!entry_is_zero(x)) return false;
  }
  return true;
}

Vector unit_vector(std::size_t n, std::size_t i);
Matrix block_diagonal(const Matrix& a, const Matrix& b);
/// Kronecker product: (a (x) b)(i*p+k, j*q+l) = a(i,j) b(k,l).
Matrix kronecker(const Matrix& a, const Matrix& b);
/// Matrix whose columns are the given vectors (all of length `rows`).
Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
std::string to_string(const Vector& v);

}  // namespace superpair
