#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "superpair/superlinear/matrix.hpp"
#include "superpair/superlinear/parity.hpp"

namespace superpair {

struct Echelon {
  Matrix rref;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form; the pivot in each column is the first nonzero
/// entry at or below the current row.
Echelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}, one vector per free column.
std::vector<Vector> nullspace(const Matrix& m);
/// One exact solution of a x = rhs, or nullopt. Throws std::invalid_argument
/// if rhs has the wrong length.
std::optional<Vector> solve_linear(const Matrix& a, const Vector& rhs);
std::optional<Matrix> inverse(const Matrix& m);
/// Indices of the pivot columns (a maximal independent subset, earliest first).
std::vector<std::size_t> independent_columns(const Matrix& m);
std::size_t rank_of(const std::vector<Vector>& vectors, std::size_t length);

/// Coordinates relative to a fixed list of linearly independent vectors.
class SpanSolver {
 public:
  /// Throws std::invalid_argument if the vectors are dependent.
  SpanSolver(const std::vector<Vector>& basis, std::size_t length);
  std::size_t size() const { return k_; }
  std::size_t length() const { return n_; }
  /// Coordinates of v, or nullopt if v is outside the span.
  std::optional<Vector> coordinates(const Vector& v) const;

 private:
  std::size_t n_;
  std::size_t k_;
  Matrix transform_;  // transform_ * basis = [I_k; 0]
};

/// Nullspace of m whose columns are graded by `grading`. If the nullspace is a
/// graded subspace, the basis returned consists of parity-homogeneous vectors
/// (even ones first); otherwise this is plain `nullspace`.
std::vector<Vector> graded_nullspace(const Matrix& m, const SuperSpace& grading);

/// Basis of {k : b(k, s) = 0 for all s in S}, with b(x, y) = x^T b y. When a
/// grading is supplied and the complement is graded, the basis returned is
/// parity-homogeneous. Throws std::invalid_argument on a length mismatch.
std::vector<Vector> orthogonal_complement(const Matrix& b, const std::vector<Vector>& subspace,
                                          const SuperSpace* grading = nullptr);

bool same_subspace(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t length);

/// Parity of a vector: the common parity of its support, or nullopt if mixed.
/// The zero vector is reported as even.
std::optional<Parity> vector_parity(const Vector& v, const SuperSpace& space);

}  // namespace superpair
