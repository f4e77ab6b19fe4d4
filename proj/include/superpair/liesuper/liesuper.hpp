#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <vector>

#include "superpair/superlinear/linalg.hpp"
#include "superpair/superlinear/parity.hpp"
#include "superpair/superlinear/report.hpp"
#include "superpair/superlinear/scalar.hpp"
#include "superpair/superlinear/supermap.hpp"
#include "superpair/superlinear/tensor.hpp"

namespace superpair {

/// Lie superalgebra by structure constants: [x_i, x_j] = sum_k c(i,j,k) x_k.
/// Axioms are not enforced at construction; see check_lie_axioms.
class LieSuperAlgebra {
 public:
  LieSuperAlgebra(Field field, SuperSpace space, SparseTensor<3> bracket);
  /// ad[i](k, j) = c(i, j, k).
  static LieSuperAlgebra from_ad(Field field, SuperSpace space, const std::vector<Matrix>& ad);

  const Field& field() const { return field_; }
  const SuperSpace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  const SparseTensor<3>& bracket_tensor() const { return bracket_; }

  const Matrix& ad(std::size_t i) const { return ad_[i]; }
  Vector bracket(std::size_t i, std::size_t j) const { return ad_[i].column(j); }
  Vector bracket(const Vector& x, const Vector& y) const;

  /// Same field, grading and structure constants.
  bool same_as(const LieSuperAlgebra& other) const;

 private:
  Field field_;
  SuperSpace space_;
  SparseTensor<3> bracket_;
  std::vector<Matrix> ad_;
};

using LieHandle = std::shared_ptr<const LieSuperAlgebra>;

LieHandle make_lie(Field field, SuperSpace space, SparseTensor<3> bracket);

/// Supermodule by structure constants: x_i . v_j = sum_k a(i,j,k) v_k.
class SuperModule {
 public:
  SuperModule(LieHandle algebra, SuperSpace space, SparseTensor<3> action);
  /// rho[i](k, j) = a(i, j, k).
  static SuperModule from_matrices(LieHandle algebra, SuperSpace space, const std::vector<Matrix>& rho);

  const LieHandle& algebra() const { return algebra_; }
  const SuperSpace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  const SparseTensor<3>& action_tensor() const { return action_; }

  const Matrix& rho(std::size_t i) const { return rho_[i]; }
  const std::vector<Matrix>& rho_all() const { return rho_; }
  /// Operator of the algebra element with coordinates x.
  Matrix rho(const Vector& x) const;
  Vector act(const Vector& x, const Vector& v) const { return rho(x) * v; }

 private:
  LieHandle algebra_;
  SuperSpace space_;
  SparseTensor<3> action_;
  std::vector<Matrix> rho_;
};

/// (L, M, b): algebra, module over it, and the Gram matrix of b.
struct MetricModuleTriple {
  LieHandle algebra;
  SuperModule module;
  Matrix form;

  const Field& field() const { return algebra->field(); }
};

/// Throws std::invalid_argument when two modules are over different algebras.
class AlgebraMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool same_algebra(const LieHandle& a, const LieHandle& b);

// Axiom checks. The *_identities functions expose the identities that the
// corresponding check sweeps, so witnesses can be re-evaluated.
std::vector<Identity> lie_identities(const LieHandle& algebra);
Report check_lie_axioms(const LieHandle& algebra, const CheckOptions& options = {});

std::vector<Identity> module_identities(const SuperModule& module);
Report check_module(const SuperModule& module, const CheckOptions& options = {});

/// Identities "homogeneous", "invariant", "supersymmetric"; nondegeneracy is a rank test.
std::vector<Identity> form_identities(const LieHandle& algebra, const Matrix& form);
Report check_form_b(const LieHandle& algebra, const Matrix& form, const CheckOptions& options = {});

/// Lie axioms, module axioms and the four form properties, with prefixes
/// "lie.", "module.", "form.".
Report check_triple(const MetricModuleTriple& triple, const CheckOptions& options = {});

// Constructions on supermodules.
SuperModule dual_module_left(const SuperModule& m);
SuperModule dual_module_right(const SuperModule& m);
/// Basis v_a (x) w_b at index a * dim(N) + b.
SuperModule tensor_module(const SuperModule& m, const SuperModule& n);
SuperModule direct_sum_modules(const SuperModule& m, const SuperModule& n);
/// Hom(M, N) on the basis E_(t,s) : v_s -> w_t at index t * dim(M) + s.
SuperModule hom_module(const SuperModule& m, const SuperModule& n);

/// L1 (+) L2 with the blocks of L1 first.
LieHandle direct_sum_algebras(const LieHandle& a, const LieHandle& b);
/// The module M over L_k viewed over a direct sum in which L_k's basis starts
/// at `offset`; the other summands act by zero.
SuperModule inflate(const SuperModule& m, const LieHandle& sum, std::size_t offset);
/// (+)L_i, (+)M_i, b_1 _|_ ... _|_ b_n. Throws std::invalid_argument on an empty list.
MetricModuleTriple direct_sum(const std::vector<MetricModuleTriple>& triples);

/// Homogeneous basis of {x in L : x . M = 0}.
std::vector<Vector> representation_kernel(const SuperModule& m);
bool is_faithful(const SuperModule& m);

/// Subalgebra spanned by `basis` (coordinates in L), with structure constants in
/// that basis. Throws std::invalid_argument if the span is not closed.
LieHandle subalgebra(const LieHandle& algebra, const std::vector<Vector>& basis);
/// The module M restricted to the subalgebra `sub` spanned by `basis`.
SuperModule restrict_module(const SuperModule& m, const LieHandle& sub, const std::vector<Vector>& basis);

/// Identity phi rho_A(x_i) = rho_B(x_i) phi for an even linear map phi : A -> B.
Identity module_map_identity(const SuperModule& a, const SuperModule& b, const Matrix& phi);

/// Result of hom_fixed: a basis of und-Hom_S(W, V) as dim V x dim W matrices,
/// the T-action on it, and the evaluation map Hom (x) W -> V, f (x) w |-> f(w).
struct HomSpace {
  SuperSpace space;
  std::vector<Matrix> maps;
  std::size_t even_count = 0;  // the first even_count maps are even
  SuperModule t_module;
  SuperMap evaluation;
};

/// und-Hom_S(W, V) for S-modules W and v_s, where v_t is a T-action on the same
/// space as v_s. Throws std::invalid_argument if the two actions on V do not
/// supercommute or the spaces do not match.
HomSpace hom_fixed(const SuperModule& w, const SuperModule& v_s, const SuperModule& v_t);

}  // namespace superpair
