#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "superpair/superlinear/matrix.hpp"

namespace superpair {

/// R = F[t] / (t^2 + c1 t + c0). Dual numbers are c0 = c1 = 0.
struct QuadraticRing {
  Scalar c0;
  Scalar c1;

  static std::shared_ptr<const QuadraticRing> dual_numbers();
  /// Monic t^2 + c1 t + c0.
  static std::shared_ptr<const QuadraticRing> monic(Scalar c1, Scalar c0);
  /// Parses "dual" or "quad:C1,C0" (coefficients of t and 1 in t^2 + C1 t + C0).
  static std::shared_ptr<const QuadraticRing> parse(std::string_view text, const class Field& field);
  std::string describe() const;
};

/// a + b t. Elements built from plain scalars have no ring attached and act as
/// constants; the ring is picked up from whichever operand carries one.
class RingElement {
 public:
  RingElement() = default;
  RingElement(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  RingElement(Scalar a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  RingElement(Scalar a, Scalar b, std::shared_ptr<const QuadraticRing> ring)
      : a_(std::move(a)), b_(std::move(b)), ring_(std::move(ring)) {}

  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  const std::shared_ptr<const QuadraticRing>& ring() const { return ring_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  /// Inverse if this is a unit of R.
  std::optional<RingElement> inverse() const;

  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const RingElement& o);
  friend RingElement operator+(RingElement x, const RingElement& y) { return x += y; }
  friend RingElement operator-(RingElement x, const RingElement& y) { return x -= y; }
  friend RingElement operator*(RingElement x, const RingElement& y) { return x *= y; }
  RingElement operator-() const { return RingElement(-a_, -b_, ring_); }
  friend bool operator==(const RingElement& x, const RingElement& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  std::string to_string() const;

 private:
  void adopt(const RingElement& o) {
    if (!ring_) ring_ = o.ring_;
  }
  Scalar a_;
  Scalar b_;
  std::shared_ptr<const QuadraticRing> ring_;
};

inline bool is_zero(const RingElement& r) { return r.is_zero(); }

using RingMatrix = BasicMatrix<RingElement>;

RingMatrix to_ring(const Matrix& m);
/// Splits a ring matrix A + B t into (A, B).
std::pair<Matrix, Matrix> split(const RingMatrix& m);
/// Inverse over R, computed through the 2n x 2n F-realization of
/// multiplication by A + B t. nullopt if not invertible over R.
std::optional<RingMatrix> inverse(const RingMatrix& m, const QuadraticRing& ring,
                                  const std::shared_ptr<const QuadraticRing>& handle);

/// Scalars recorded in witnesses: plain scalars as themselves, ring elements as (a, b).
inline void flatten_into(Vector& out, const Scalar& s) { out.push_back(s); }
inline void flatten_into(Vector& out, const RingElement& r) {
  out.push_back(r.a());
  out.push_back(r.b());
}
template <class E>
Vector flatten(const std::vector<E>& v) {
  Vector out;
  for (const auto& x : v) flatten_into(out, x);
  return out;
}
template <class E>
Vector flatten(const BasicMatrix<E>& m) {
  return flatten(m.flat());
}

}  // namespace superpair
