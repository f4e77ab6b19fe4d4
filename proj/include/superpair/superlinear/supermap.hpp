#pragma once

#include <optional>

#include "superpair/superlinear/matrix.hpp"
#include "superpair/superlinear/parity.hpp"

namespace superpair {

/// Linear map between super spaces; matrix is target-dim x source-dim.
struct SuperMap {
  SuperSpace source;
  SuperSpace target;
  Matrix matrix;

  SuperMap() = default;
  /// Throws std::invalid_argument if the matrix shape does not match.
  SuperMap(SuperSpace src, SuperSpace tgt, Matrix m);
  static SuperMap identity(const SuperSpace& space);

  /// Component of degree a: entries connecting basis vectors whose parities differ by a.
  SuperMap component(Parity a) const;
  bool is_homogeneous(Parity a) const;
  /// Degree of a nonzero homogeneous map; zero maps report even; nullopt if mixed.
  std::optional<Parity> degree() const;
};

/// Dual of a map M -> N as a map N* -> M* on dual bases, with the sign
/// <phi^<-(f), v> = eta_{phi,f} <f, phi(v)> applied per homogeneous component.
SuperMap left_dual_map(const SuperMap& phi);
/// Same with the sign eta_{phi,v}.
SuperMap right_dual_map(const SuperMap& phi);

/// Pairing <f_i, v_j> between V- (rows) and V+ (columns).
struct PairingForm {
  SuperSpace left;
  SuperSpace right;
  Matrix matrix;

  PairingForm() = default;
  PairingForm(SuperSpace l, SuperSpace r, Matrix m);
  /// Canonical pairing of a space with its dual basis.
  static PairingForm canonical(const SuperSpace& space);

  bool is_homogeneous() const;
  bool is_nondegenerate() const;
  Scalar operator()(const Vector& f, const Vector& v) const;
};

/// <f (x) g, v (x) w> = eta_{g,v} <f,v> <g,w> on product bases.
PairingForm tensor_pairing(const PairingForm& p, const PairingForm& q);

}  // namespace superpair
