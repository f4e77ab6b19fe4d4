#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "superpair/superlinear/scalar.hpp"

namespace superpair {

/// Element of Z/2: 0 is even, 1 is odd.
using Parity = std::uint8_t;

inline Parity add(Parity a, Parity b) { return static_cast<Parity>((a + b) & 1U); }
inline int sign(Parity a) { return (a & 1U) ? -1 : 1; }
inline int eta(Parity a, Parity b) { return (a & b & 1U) ? -1 : 1; }
inline int eta(Parity a, Parity b, Parity c) { return eta(a, b) * eta(b, c) * eta(c, a); }

/// (-1)^{xy} for two parities, (-1)^{xy+yz+zx} for three. Throws
/// std::invalid_argument for any other length.
Scalar eta(std::span<const Parity> parities);
Scalar eta(std::initializer_list<Parity> parities);

/// Multiplies by +1 or -1 without going through a scalar product.
inline Scalar apply_sign(int s, const Scalar& x) { return s < 0 ? -x : x; }

/// Z/2-graded space given by the parity of each basis vector.
class SuperSpace {
 public:
  SuperSpace() = default;
  explicit SuperSpace(std::vector<Parity> parities);
  /// `even` even vectors followed by `odd` odd vectors.
  static SuperSpace standard(std::size_t even, std::size_t odd);

  std::size_t dim() const { return parities_.size(); }
  Parity parity(std::size_t i) const { return parities_[i]; }
  const std::vector<Parity>& parities() const { return parities_; }
  std::size_t even_dim() const;
  std::size_t odd_dim() const { return dim() - even_dim(); }

  /// Basis of this space followed by the basis of `other`.
  SuperSpace direct_sum(const SuperSpace& other) const;
  /// Basis e_a (x) e_b at index a * other.dim() + b.
  SuperSpace tensor(const SuperSpace& other) const;
  /// Every parity shifted by `a`.
  SuperSpace shifted(Parity a) const;

  friend bool operator==(const SuperSpace& a, const SuperSpace& b) { return a.parities_ == b.parities_; }

 private:
  std::vector<Parity> parities_;
};

}  // namespace superpair
