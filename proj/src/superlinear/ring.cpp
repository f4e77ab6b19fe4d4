#include "superpair/superlinear/ring.hpp"

#include <stdexcept>

#include "superpair/superlinear/linalg.hpp"

namespace superpair {

std::shared_ptr<const QuadraticRing> QuadraticRing::dual_numbers() {
  return std::make_shared<const QuadraticRing>(QuadraticRing{Scalar(0), Scalar(0)});
}

std::shared_ptr<const QuadraticRing> QuadraticRing::monic(Scalar c1, Scalar c0) {
  return std::make_shared<const QuadraticRing>(QuadraticRing{std::move(c0), std::move(c1)});
}

std::shared_ptr<const QuadraticRing> QuadraticRing::parse(std::string_view text, const Field& field) {
  if (text == "dual") return dual_numbers();
  if (text.rfind("quad:", 0) != 0) throw std::invalid_argument("unknown ring '" + std::string(text) + "'");
  const auto body = text.substr(5);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) throw std::invalid_argument("quadratic ring needs 'quad:C1,C0'");
  return monic(field.parse_scalar(body.substr(0, comma)), field.parse_scalar(body.substr(comma + 1)));
}

std::string QuadraticRing::describe() const {
  return "F[t]/(t^2 + (" + c1.to_string() + ")t + (" + c0.to_string() + "))";
}

RingElement& RingElement::operator+=(const RingElement& o) {
  adopt(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  adopt(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

RingElement& RingElement::operator*=(const RingElement& o) {
  adopt(o);
  const Scalar bd = b_ * o.b_;
  Scalar a = a_ * o.a_;
  Scalar b = a_ * o.b_ + b_ * o.a_;
  if (!bd.is_zero()) {
    if (!ring_) throw std::logic_error("ring element without a ring");
    // t^2 = -c1 t - c0
    a -= bd * ring_->c0;
    b -= bd * ring_->c1;
  }
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

std::optional<RingElement> RingElement::inverse() const {
  if (b_.is_zero()) {
    if (a_.is_zero()) return std::nullopt;
    return RingElement(a_.inverse(), Scalar(0), ring_);
  }
  // (a + b t)(c + d t) = 1 as a 2x2 system over F.
  const Scalar c0 = ring_->c0;
  const Scalar c1 = ring_->c1;
  const Matrix m = Matrix::from_rows({{a_, -c0 * b_}, {b_, a_ - c1 * b_}});
  auto sol = solve_linear(m, Vector{Scalar(1), Scalar(0)});
  if (!sol || rank(m) < 2) return std::nullopt;
  return RingElement((*sol)[0], (*sol)[1], ring_);
}

std::string RingElement::to_string() const { return a_.to_string() + " + (" + b_.to_string() + ")t"; }

RingMatrix to_ring(const Matrix& m) {
  RingMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = RingElement(m(i, j));
  }
  return r;
}

std::pair<Matrix, Matrix> split(const RingMatrix& m) {
  Matrix a(m.rows(), m.cols());
  Matrix b(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      a(i, j) = m(i, j).a();
      b(i, j) = m(i, j).b();
    }
  }
  return {a, b};
}

std::optional<RingMatrix> inverse(const RingMatrix& m, const QuadraticRing& ring,
                                  const std::shared_ptr<const QuadraticRing>& handle) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  const auto [a, b] = split(m);
  // Multiplication by A + B t on (x + y t) in coordinates (x, y):
  // [[A, -c0 B], [B, A - c1 B]].
  Matrix big(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      big(i, j) = a(i, j);
      big(i, n + j) = -ring.c0 * b(i, j);
      big(n + i, j) = b(i, j);
      big(n + i, n + j) = a(i, j) - ring.c1 * b(i, j);
    }
  }
  const auto inv = inverse(big);
  if (!inv) return std::nullopt;
  // The inverse of an R-linear map is R-linear: its first block column is X + Y t.
  RingMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) r(i, j) = RingElement((*inv)(i, j), (*inv)(n + i, j), handle);
  }
  return r;
}

}  // namespace superpair
