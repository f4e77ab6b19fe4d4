#include "superpair/superlinear/supermap.hpp"

#include <stdexcept>

#include "superpair/superlinear/linalg.hpp"

namespace superpair {

SuperMap::SuperMap(SuperSpace src, SuperSpace tgt, Matrix m)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
  if (matrix.rows() != target.dim() || matrix.cols() != source.dim()) {
    throw std::invalid_argument("map matrix is " + std::to_string(matrix.rows()) + "x" +
                                std::to_string(matrix.cols()) + ", expected " + std::to_string(target.dim()) + "x" +
                                std::to_string(source.dim()));
  }
}

SuperMap SuperMap::identity(const SuperSpace& space) { return SuperMap(space, space, Matrix::identity(space.dim())); }

SuperMap SuperMap::component(Parity a) const {
  Matrix m(matrix.rows(), matrix.cols());
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
      if (add(target.parity(i), source.parity(j)) == a) m(i, j) = matrix(i, j);
    }
  }
  return SuperMap(source, target, std::move(m));
}

bool SuperMap::is_homogeneous(Parity a) const { return component(add(a, 1)).matrix.is_zero(); }

std::optional<Parity> SuperMap::degree() const {
  if (is_homogeneous(0)) return Parity{0};
  if (is_homogeneous(1)) return Parity{1};
  return std::nullopt;
}

namespace {

SuperMap dual_map(const SuperMap& phi, bool left) {
  Matrix d(phi.source.dim(), phi.target.dim());
  for (std::size_t i = 0; i < phi.matrix.rows(); ++i) {
    for (std::size_t j = 0; j < phi.matrix.cols(); ++j) {
      const Scalar& a = phi.matrix(i, j);
      if (a.is_zero()) continue;
      const Parity deg = add(phi.target.parity(i), phi.source.parity(j));
      const Parity other = left ? phi.target.parity(i) : phi.source.parity(j);
      d(j, i) = apply_sign(eta(deg, other), a);
    }
  }
  return SuperMap(phi.target, phi.source, std::move(d));
}

}  // namespace

SuperMap left_dual_map(const SuperMap& phi) { return dual_map(phi, true); }
SuperMap right_dual_map(const SuperMap& phi) { return dual_map(phi, false); }

PairingForm::PairingForm(SuperSpace l, SuperSpace r, Matrix m)
    : left(std::move(l)), right(std::move(r)), matrix(std::move(m)) {
  if (matrix.rows() != left.dim() || matrix.cols() != right.dim()) {
    throw std::invalid_argument("pairing matrix shape does not match its spaces");
  }
}

PairingForm PairingForm::canonical(const SuperSpace& space) {
  return PairingForm(space, space, Matrix::identity(space.dim()));
}

bool PairingForm::is_homogeneous() const {
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
      if (left.parity(i) != right.parity(j) && !matrix(i, j).is_zero()) return false;
    }
  }
  return true;
}

bool PairingForm::is_nondegenerate() const {
  return left.dim() == right.dim() && rank(matrix) == left.dim();
}

Scalar PairingForm::operator()(const Vector& f, const Vector& v) const {
  const Vector pv = matrix * v;
  Scalar s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f[i].is_zero()) s += f[i] * pv[i];
  }
  return s;
}

PairingForm tensor_pairing(const PairingForm& p, const PairingForm& q) {
  const std::size_t n1 = q.left.dim();
  const std::size_t n2 = q.right.dim();
  Matrix m(p.left.dim() * n1, p.right.dim() * n2);
  for (std::size_t f = 0; f < p.left.dim(); ++f) {
    for (std::size_t v = 0; v < p.right.dim(); ++v) {
      if (p.matrix(f, v).is_zero()) continue;
      for (std::size_t g = 0; g < n1; ++g) {
        for (std::size_t w = 0; w < n2; ++w) {
          if (q.matrix(g, w).is_zero()) continue;
          m(f * n1 + g, v * n2 + w) = apply_sign(eta(q.left.parity(g), p.right.parity(v)), p.matrix(f, v) * q.matrix(g, w));
        }
      }
    }
  }
  return PairingForm(p.left.tensor(q.left), p.right.tensor(q.right), std::move(m));
}

}  // namespace superpair
