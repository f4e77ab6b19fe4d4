#include "superpair/superlinear/linalg.hpp"

#include <stdexcept>

namespace superpair {

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = Scalar(1);
  return v;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  }
  return m;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
      }
    }
  }
  return m;
}

Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

std::string to_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + ")";
}

Echelon row_reduce(Matrix m) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    }
    const Scalar inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Scalar factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(i, j) -= factor * m(row, j);
      }
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.rref = std::move(m);
  return e;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<Vector> nullspace(const Matrix& m) {
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector x(m.cols());
    x[free] = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = -e.rref(r, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Vector> solve_linear(const Matrix& a, const Vector& rhs) {
  if (rhs.size() != a.rows()) {
    throw std::invalid_argument("right-hand side has length " + std::to_string(rhs.size()) + ", expected " +
                                std::to_string(a.rows()));
  }
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = rhs[i];
  }
  const Echelon e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.rref(r, a.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar(1);
  }
  const Echelon e = row_reduce(std::move(aug));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rref(i, n + j);
  }
  return inv;
}

std::vector<std::size_t> independent_columns(const Matrix& m) { return row_reduce(m).pivots; }

std::size_t rank_of(const std::vector<Vector>& vectors, std::size_t length) {
  return rank(from_columns(vectors, length));
}

SpanSolver::SpanSolver(const std::vector<Vector>& basis, std::size_t length) : n_(length), k_(basis.size()) {
  Matrix aug(n_, k_ + n_);
  for (std::size_t j = 0; j < k_; ++j) {
    if (basis[j].size() != n_) throw std::invalid_argument("basis vector length mismatch");
    for (std::size_t i = 0; i < n_; ++i) aug(i, j) = basis[j][i];
  }
  for (std::size_t i = 0; i < n_; ++i) aug(i, k_ + i) = Scalar(1);
  const Echelon e = row_reduce(std::move(aug));
  for (std::size_t r = 0; r < k_; ++r) {
    if (r >= e.pivots.size() || e.pivots[r] != r) throw std::invalid_argument("span basis is linearly dependent");
  }
  transform_ = Matrix(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) transform_(i, j) = e.rref(i, k_ + j);
  }
}

std::optional<Vector> SpanSolver::coordinates(const Vector& v) const {
  if (v.size() != n_) throw std::invalid_argument("vector length mismatch");
  const Vector t = transform_ * v;
  for (std::size_t i = k_; i < n_; ++i) {
    if (!t[i].is_zero()) return std::nullopt;
  }
  return Vector(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(k_));
}

namespace {

// Nullspace of `constraints` restricted to the coordinates in `support`,
// embedded back into the full space.
std::vector<Vector> restricted_nullspace(const Matrix& constraints, const std::vector<std::size_t>& support) {
  Matrix sub(constraints.rows(), support.size());
  for (std::size_t i = 0; i < constraints.rows(); ++i) {
    for (std::size_t j = 0; j < support.size(); ++j) sub(i, j) = constraints(i, support[j]);
  }
  std::vector<Vector> out;
  for (const auto& x : nullspace(sub)) {
    Vector full(constraints.cols());
    for (std::size_t j = 0; j < support.size(); ++j) full[support[j]] = x[j];
    out.push_back(std::move(full));
  }
  return out;
}

}  // namespace

std::vector<Vector> orthogonal_complement(const Matrix& b, const std::vector<Vector>& subspace,
                                          const SuperSpace* grading) {
  const std::size_t n = b.rows();
  if (b.cols() != n) throw std::invalid_argument("form matrix must be square");
  Matrix constraints(subspace.size(), n);
  for (std::size_t r = 0; r < subspace.size(); ++r) {
    if (subspace[r].size() != n) {
      throw std::invalid_argument("subspace vector " + std::to_string(r) + " does not lie in the ambient space");
    }
    const Vector bs = b * subspace[r];
    for (std::size_t j = 0; j < n; ++j) constraints(r, j) = bs[j];
  }
  if (grading == nullptr || grading->dim() != n) return nullspace(constraints);
  return graded_nullspace(constraints, *grading);
}

std::vector<Vector> graded_nullspace(const Matrix& m, const SuperSpace& grading) {
  std::vector<Vector> full = nullspace(m);
  std::vector<Vector> graded;
  for (Parity p : {Parity{0}, Parity{1}}) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < m.cols(); ++i) {
      if (grading.parity(i) == p) support.push_back(i);
    }
    for (auto& v : restricted_nullspace(m, support)) graded.push_back(std::move(v));
  }
  return graded.size() == full.size() ? graded : full;
}

bool same_subspace(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t length) {
  std::vector<Vector> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t ra = rank_of(a, length);
  const std::size_t rb = rank_of(b, length);
  return ra == rb && rank_of(both, length) == ra;
}

std::optional<Parity> vector_parity(const Vector& v, const SuperSpace& space) {
  std::optional<Parity> p;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (p && *p != space.parity(i)) return std::nullopt;
    p = space.parity(i);
  }
  return p.value_or(Parity{0});
}

}  // namespace superpair
