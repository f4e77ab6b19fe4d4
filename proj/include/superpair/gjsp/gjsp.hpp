#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superpair/liesuper/liesuper.hpp"
#include "superpair/superlinear/ring.hpp"

namespace superpair {

/// Selects V- or V+.
enum class Sign { minus, plus };

inline Sign opposite(Sign s) { return s == Sign::minus ? Sign::plus : Sign::minus; }
inline const char* sign_name(Sign s) { return s == Sign::minus ? "minus" : "plus"; }

/// Trilinear pair with products {x,y,z}^s for x, z in V^s and y in V^-s.
/// product(s) holds entries (x, y, z, out).
class Gjsp {
 public:
  Gjsp(Field field, SuperSpace minus, SuperSpace plus, SparseTensor<4> minus_product, SparseTensor<4> plus_product);
  /// Both products zero.
  static Gjsp zero(Field field, SuperSpace minus, SuperSpace plus);

  const Field& field() const { return field_; }
  const SuperSpace& space(Sign s) const { return s == Sign::minus ? minus_ : plus_; }
  std::size_t dim(Sign s) const { return space(s).dim(); }
  Parity parity(Sign s, std::size_t i) const { return space(s).parity(i); }
  const SparseTensor<4>& product(Sign s) const { return s == Sign::minus ? minus_product_ : plus_product_; }

  /// D^s_{x,y} acting on V^s, for basis x in V^s and y in V^-s.
  const Matrix& D(Sign s, std::size_t x, std::size_t y) const {
    return (s == Sign::minus ? d_minus_ : d_plus_)[x * dim(opposite(s)) + y];
  }
  Matrix D(Sign s, const Vector& x, const Vector& y) const;
  /// D^s_{x, u} for basis x and arbitrary u in V^-s.
  Matrix D_left_basis(Sign s, std::size_t x, const Vector& u) const;
  /// D^s_{u, y} for arbitrary u in V^s and basis y.
  Matrix D_right_basis(Sign s, const Vector& u, std::size_t y) const;
  Vector triple(Sign s, const Vector& x, const Vector& y, const Vector& z) const;

  friend bool operator==(const Gjsp& a, const Gjsp& b) {
    return a.field_ == b.field_ && a.minus_ == b.minus_ && a.plus_ == b.plus_ &&
           a.minus_product_ == b.minus_product_ && a.plus_product_ == b.plus_product_;
  }

 private:
  Field field_;
  SuperSpace minus_;
  SuperSpace plus_;
  SparseTensor<4> minus_product_;
  SparseTensor<4> plus_product_;
  std::vector<Matrix> d_minus_;
  std::vector<Matrix> d_plus_;
};

/// A pair together with a pairing <.,.> : V- x V+ -> F.
struct GjspObject {
  Gjsp pair;
  PairingForm pairing;

  friend bool operator==(const GjspObject& a, const GjspObject& b) {
    return a.pair == b.pair && a.pairing.left == b.pairing.left && a.pairing.right == b.pairing.right &&
           a.pairing.matrix == b.pairing.matrix;
  }
};

/// Identities "fundamental_identity_minus" and "fundamental_identity_plus",
/// indexed by (x, y, z, w); sides are the flattened operators.
std::vector<Identity> fundamental_identities(const Gjsp& v);
std::vector<Identity> parity_identities(const Gjsp& v);
/// Parity additivity of both products and the fundamental identity for both signs.
Report check_fundamental_identity(const Gjsp& v, const CheckOptions& options = {});

/// Identities indexed by (x, y, z, w) with x, z in V- and y, w in V+:
/// left_superinvariant, right_superinvariant, left_supersymmetric_1,
/// left_supersymmetric_2, right_supersymmetric_1, right_supersymmetric_2.
std::vector<Identity> pairing_identities(const GjspObject& o);
/// The identities above plus "homogeneous" and "nondegenerate".
Report check_pairing_properties(const GjspObject& o, const CheckOptions& options = {});
/// Names of the properties required of a pairing in the correspondence.
const std::vector<std::string>& good_pairing_properties();
/// Fundamental identity plus the good pairing properties.
Report check_object(const GjspObject& o, const CheckOptions& options = {});

/// nu(x, y) = (D-_{x,y}, -eta_{x,y} D+_{y,x}).
struct NuOperator {
  Matrix minus;
  Matrix plus;
  std::optional<Parity> parity;

  Vector flat() const;
  bool is_zero() const { return minus.is_zero() && plus.is_zero(); }
  friend bool operator==(const NuOperator& a, const NuOperator& b) { return a.minus == b.minus && a.plus == b.plus; }
};

NuOperator nu(const Gjsp& v, std::size_t x, std::size_t y);
/// Bilinear extension to arbitrary x in V-, y in V+.
NuOperator nu(const Gjsp& v, const Vector& x, const Vector& y);
/// Supercommutator of two homogeneous operators.
NuOperator bracket(const NuOperator& a, const NuOperator& b);

/// instr(V): basis chosen among the generators nu(f_i, v_j) in lexicographic
/// order, with structure constants and the faithful modules V-, V+.
struct InnerStructure {
  LieHandle algebra;
  std::vector<NuOperator> basis;
  std::vector<std::pair<std::size_t, std::size_t>> basis_generators;
  /// Coordinates of nu(f_i, v_j) in the basis, at index i * dim V+ + j.
  std::vector<Vector> generator_coordinates;
  SuperModule minus_module;
  SuperModule plus_module;

  const Vector& generator(std::size_t i, std::size_t j) const {
    return generator_coordinates[i * plus_module.dim() + j];
  }
};

/// Raised when a commutator of generators leaves their span.
class NotClosedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

InnerStructure instr(const Gjsp& v);

/// Operator pair (D-, D+) and its degree.
struct PairOperator {
  Matrix minus;
  Matrix plus;
};

std::vector<Identity> derivation_identities(const Gjsp& v, const PairOperator& d, Parity degree);
/// Degree check of D plus the derivation rule for both signs.
Report check_derivation(const Gjsp& v, const PairOperator& d, Parity degree, const CheckOptions& options = {});

struct Flavor {
  bool jordan_superpair = false;
  bool pair = false;      // odd parts vanish
  bool antipair = false;  // even parts vanish
  bool jordan_pair = false;
  bool jordan_antipair = false;
};

std::vector<Identity> jordan_identities(const Gjsp& v);
Flavor classify_flavor(const Gjsp& v, const CheckOptions& options = {});

/// (phi-, phi+) as dim W^s x dim V^s matrices over an entry type E.
template <class E>
struct BasicPairMap {
  BasicMatrix<E> minus;
  BasicMatrix<E> plus;
  const BasicMatrix<E>& operator[](Sign s) const { return s == Sign::minus ? minus : plus; }
};
using PairMap = BasicPairMap<Scalar>;

PairMap identity_map(const Gjsp& v);

bool is_invertible(const Matrix& m);
bool is_invertible(const RingMatrix& m);

/// {a, b, c}^s of the pair with vectors over E.
template <class E>
std::vector<E> triple_over(const Gjsp& w, Sign s, const std::vector<E>& a, const std::vector<E>& b,
                           const std::vector<E>& c) {
  std::vector<E> out(w.dim(s));
  for (const auto& [idx, value] : w.product(s).entries()) {
    if (is_zero(a[idx[0]]) || is_zero(b[idx[1]]) || is_zero(c[idx[2]])) continue;
    out[idx[3]] += a[idx[0]] * b[idx[1]] * c[idx[2]] * E(value);
  }
  return out;
}

/// Checks that phi : V -> W is an even homomorphism ("even", "homomorphism_minus",
/// "homomorphism_plus"), preserves the pairings when both are given ("form"), and
/// is bijective ("invertible").
template <class E>
Report check_pair_hom(const BasicPairMap<E>& phi, const Gjsp& v, const Gjsp& w, const PairingForm* pv = nullptr,
                      const PairingForm* pw = nullptr, const CheckOptions& options = {}) {
  for (Sign s : {Sign::minus, Sign::plus}) {
    if (phi[s].rows() != w.dim(s) || phi[s].cols() != v.dim(s)) {
      throw std::invalid_argument(std::string("pair map component ") + sign_name(s) + " has the wrong shape");
    }
  }
  auto ph = std::make_shared<const BasicPairMap<E>>(phi);
  auto pv_ = std::make_shared<const Gjsp>(v);
  auto pw_ = std::make_shared<const Gjsp>(w);
  std::vector<Identity> ids;
  ids.push_back({"even", {2, std::max(v.dim(Sign::minus), v.dim(Sign::plus))},
                 [ph, pv_, pw_](std::span<const std::size_t> t) {
                   const Sign s = t[0] == 0 ? Sign::minus : Sign::plus;
                   std::vector<E> off;
                   if (t[1] < pv_->dim(s)) {
                     for (std::size_t r = 0; r < pw_->dim(s); ++r) {
                       off.push_back(pw_->parity(s, r) != pv_->parity(s, t[1]) ? (*ph)[s](r, t[1]) : E());
                     }
                   }
                   const Vector lhs = flatten(off);
                   return Identity::Sides{lhs, Vector(lhs.size())};
                 }});
  for (Sign s : {Sign::minus, Sign::plus}) {
    const Sign o = opposite(s);
    ids.push_back({std::string("homomorphism_") + sign_name(s), {v.dim(s), v.dim(o), v.dim(s)},
                   [ph, pv_, pw_, s, o](std::span<const std::size_t> t) {
                     const auto& A = (*ph)[s];
                     const auto& B = (*ph)[o];
                     std::vector<E> inner;
                     for (const auto& x : pv_->D(s, t[0], t[1]).column(t[2])) inner.push_back(E(x));
                     const std::vector<E> lhs = A * inner;
                     const std::vector<E> rhs = triple_over<E>(*pw_, s, A.column(t[0]), B.column(t[1]), A.column(t[2]));
                     return Identity::Sides{flatten(lhs), flatten(rhs)};
                   }});
  }
  Report r = sweep_all(ids, options);
  if (pv != nullptr && pw != nullptr) {
    auto fv = std::make_shared<const PairingForm>(*pv);
    auto fw = std::make_shared<const PairingForm>(*pw);
    r.add(sweep({"form", {v.dim(Sign::minus), v.dim(Sign::plus)},
                 [ph, fv, fw](std::span<const std::size_t> t) {
                   const std::vector<E> a = ph->minus.column(t[0]);
                   const std::vector<E> b = ph->plus.column(t[1]);
                   E lhs;
                   for (std::size_t i = 0; i < a.size(); ++i) {
                     if (is_zero(a[i])) continue;
                     for (std::size_t j = 0; j < b.size(); ++j) {
                       if (!is_zero(b[j]) && !fw->matrix(i, j).is_zero()) lhs += a[i] * E(fw->matrix(i, j)) * b[j];
                     }
                   }
                   Vector l, rr;
                   flatten_into(l, lhs);
                   flatten_into(rr, E(fv->matrix(t[0], t[1])));
                   return Identity::Sides{l, rr};
                 }},
                options));
  }
  r.add(single_result("invertible", is_invertible(phi.minus) && is_invertible(phi.plus)));
  return r;
}

/// The structure on new bases V'^s (columns of phi^s, in coordinates of V^s)
/// that makes phi : V' -> V an isomorphism: {a,b,c}' = (phi^s)^-1 {phi a, phi b, phi c}
/// and <f, v>' = <phi- f, phi+ v>. Columns must be parity-homogeneous.
GjspObject transport(const GjspObject& o, const PairMap& phi);

/// The unique phi- with <phi- f, phi+ v>_target = <f, v>_source.
/// nullopt if a pairing or phi+ is singular.
std::optional<Matrix> pairing_partner(const PairingForm& source, const PairingForm& target, const Matrix& phi_plus);

/// Same pair, pairing multiplied by c.
GjspObject scale_pairing(const GjspObject& o, const Scalar& c);

}  // namespace superpair
