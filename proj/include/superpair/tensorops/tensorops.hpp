#pragma once

#include <string>
#include <vector>

#include "superpair/faulkner/faulkner.hpp"

namespace superpair {

/// Left tensor product: forward construction on (L1 + L2, M1 (x) M2, b1 _|_ b2),
/// expressed on the bases x1 (x) x2 (index a * dim2 + b) of both sides with the
/// tensor superproduct of the pairings.
GjspObject gjsp_tensor(const GjspObject& o1, const GjspObject& o2);

/// The same object on V1^s (x) V2^s built from the closed formulas for the
/// pairing and the triple products.
GjspObject gjsp_tensor_closed_form(const GjspObject& o1, const GjspObject& o2);

/// "pairing", "generators", "products_minus", "products_plus": the closed formulas
/// against the forward construction, entry by entry.
Report verify_tensor_formulas(const GjspObject& o1, const GjspObject& o2, const CheckOptions& options = {});

/// Sign-carrying flip x (x) y |-> eta_{x,y} y (x) x from V1 (x) V2 to V2 (x) V1,
/// as a map between the sign components of both products.
PairMap flip_map(const GjspObject& o1, const GjspObject& o2);

/// Right tensor product: gjsp_tensor(o2, o1) transported along flip_map(o1, o2).
GjspObject gjsp_tensor_right(const GjspObject& o1, const GjspObject& o2);

/// Block direct sum. Throws std::invalid_argument on an empty list or mixed fields.
GjspObject gjsp_direct_sum(const std::vector<GjspObject>& objects);

/// (lambda, a) in F x Z2.
struct ShiftParameter {
  Scalar lambda;
  Parity a = 0;

  friend ShiftParameter operator+(const ShiftParameter& x, const ShiftParameter& y) {
    return {x.lambda + y.lambda, add(x.a, y.a)};
  }
  friend bool operator==(const ShiftParameter& x, const ShiftParameter& y) {
    return x.lambda == y.lambda && x.a == y.a;
  }
  std::string to_string() const { return "(" + lambda.to_string() + ", " + std::to_string(a) + ")"; }
};

/// V_alpha: f, v of parity a with <f, v> = eta_a, {v,f,v} = lambda v, {f,v,f} = eta_a lambda f.
GjspObject onedim_object(const ShiftParameter& alpha, const Field& field = Field::rationals());

/// Throws std::invalid_argument unless both sides are 1-dimensional with a
/// nonzero homogeneous pairing.
ShiftParameter onedim_parameter(const GjspObject& o);

/// V^[alpha] on the spaces of V: parities shifted by a, <f,v> scaled by eta_a eta_{a,f},
/// {x,y,z}+ -> eta_{a,y}({x,y,z}+ + lambda <x,y> z), {x,y,z}- -> eta_a eta_{a,y}(...).
GjspObject tensor_shift(const GjspObject& o, const ShiftParameter& alpha);

/// The pair map that fixes V+ and carries the source pairing to the target
/// pairing on V-; nullopt if a pairing is singular.
std::optional<PairMap> pairing_fixing_map(const GjspObject& source, const GjspObject& target);

/// "matches_tensor": tensor_shift(o, alpha) equals gjsp_tensor(o, V_alpha) on the
/// identified bases.
Report verify_shift(const GjspObject& o, const ShiftParameter& alpha);

/// "parameter" (V_alpha (x) V_beta has parameter alpha + beta) and "iso.*"
/// (an explicit isomorphism V_{alpha+beta} -> V_alpha (x) V_beta).
Report verify_onedim_addition(const ShiftParameter& alpha, const ShiftParameter& beta,
                              const Field& field = Field::rationals());

/// "iso.*": (O^[alpha])^[beta] -> O^[alpha+beta] by pairing_fixing_map.
Report verify_shift_composition(const GjspObject& o, const ShiftParameter& alpha, const ShiftParameter& beta,
                                const CheckOptions& options = {});

/// Componentwise Kronecker product of two pair maps.
PairMap tensor_map(const PairMap& phi1, const PairMap& phi2);

/// "factor1.*", "factor2.*" membership of phi_i in Aut(O_i), then "tensor.*":
/// phi1 (x) phi2 in Aut(O1 (x) O2) including the pairing.
Report verify_aut_tensor(const PairMap& phi1, const PairMap& phi2, const GjspObject& o1, const GjspObject& o2,
                         const CheckOptions& options = {});

/// Split of instr(V) (coordinates in the backward basis) and the subspace W of V+.
struct FactorSplit {
  std::vector<Vector> l1;
  std::vector<Vector> l2;
  std::vector<Vector> w;
};

struct Factorization {
  GjspObject first;   // from (L1, W)
  GjspObject second;  // from (L2, Hom_L1(W, V+))
  /// gjsp_tensor(first, second) -> O.
  PairMap iso;
  Report report;
};

/// Throws PreconditionError when the split is not an orthogonal decomposition into
/// graded ideals, W is not an L1-submodule, or W is not absolutely irreducible
/// (End_L1(W) must be one-dimensional and dim Hom * dim W = dim V+).
Factorization tensor_factorize(const GjspObject& o, const FactorSplit& split, const CheckOptions& options = {});

}  // namespace superpair
