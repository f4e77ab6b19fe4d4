#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "superpair/gjsp/gjsp.hpp"

namespace superpair {

/// Input rejected because a required property failed; the report names it.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(const std::string& what, Report report) : std::invalid_argument(what), report_(std::move(report)) {}
  const Report& report() const { return report_; }

 private:
  Report report_;
};

/// [f_i, v_j] in L for the dual basis f_i of M* and the basis v_j of M, defined by
/// b(x, [f, v]) = <x . f, v>. The Gram inverse is computed once.
class BracketTable {
 public:
  /// Throws PreconditionError if b is degenerate.
  explicit BracketTable(const MetricModuleTriple& t);

  const MetricModuleTriple& triple() const { return triple_; }
  /// Left dual module M* on the dual basis.
  const SuperModule& dual() const { return dual_; }
  const Matrix& gram_inverse() const { return gram_inverse_; }

  const Vector& bracket(std::size_t f, std::size_t v) const { return table_[f * dim_ + v]; }
  /// [v_j, f_i] = -eta_{f,v} [f_i, v_j].
  Vector bracket_vf(std::size_t v, std::size_t f) const;
  Vector bracket(const Vector& f, const Vector& v) const;

 private:
  MetricModuleTriple triple_;
  SuperModule dual_;
  Matrix gram_inverse_;
  std::size_t dim_;
  std::vector<Vector> table_;
};

Vector bracket_of(const MetricModuleTriple& t, const Vector& f, const Vector& v);

/// [[f,v],[g,w]] = [D_{f,v} g, w] - eta_{f,v,g} [g, D_{v,f} w] and its mirror
/// [[v,f],[w,g]] = [D_{v,f} w, g] - eta_{v,f,w} [w, D_{f,v} g], indexed by (f, v, g, w).
std::vector<Identity> bracket_operator_identities(const BracketTable& table);

/// Form and module preconditions of the forward construction.
Report forward_preconditions(const MetricModuleTriple& t, const CheckOptions& options = {});

/// V- = M* (dual basis), V+ = M with {f,v,g}- = [f,v] . g, {v,f,w}+ = [v,f] . w and
/// the canonical pairing. Throws PreconditionError when forward_preconditions fails.
GjspObject faulkner_forward(const MetricModuleTriple& t, const CheckOptions& options = {});

struct InstrLM {
  /// Basis of span{[f_i, v_j]} (coordinates in L), chosen among the brackets in
  /// lexicographic order.
  std::vector<Vector> basis;
  std::vector<Vector> kernel;
  /// "ideal", "kernel_perp", and for faithful M also "full" and "instr_iso".
  Report report;
};

InstrLM instr_LM(const MetricModuleTriple& t, const CheckOptions& options = {});

/// b(nu_a, nu_b) = <D-_{f,v} g, w> on the chosen generators, checked against every
/// generator pair through their coordinates. Property "well_definedness".
Report well_definedness_audit(const GjspObject& o, const InnerStructure& inner, const CheckOptions& options = {});

struct BackwardResult {
  InnerStructure inner;
  MetricModuleTriple triple;
  Report audit;
};

/// L = instr(V), M = V+, b from the pairing. Throws PreconditionError if the
/// object fails check_object or the audit fails.
BackwardResult faulkner_backward(const GjspObject& o, const CheckOptions& options = {});

/// Algebra map L' -> L sending the backward basis nu(f_a, v_b) of
/// instr(forward(T)) to [f_a, v_b].
Matrix backward_algebra_map(const BracketTable& table, const InnerStructure& inner);

/// The start object, its image, the image of the image, and the identification
/// between the first and the last.
struct CorrespondenceWitness {
  std::optional<MetricModuleTriple> triple;
  std::optional<GjspObject> object;
  std::optional<MetricModuleTriple> triple_again;
  std::optional<GjspObject> object_again;
  /// Triple start: L_again -> L and M_again -> M. Object start: O -> O_again.
  Matrix algebra_map;
  Matrix module_map;
  PairMap pair_map;
  Report report;

  bool passed() const { return report.passed(); }
};

/// backward(forward(T)) compared with T. Throws PreconditionError if M is not faithful.
CorrespondenceWitness roundtrip_check(const MetricModuleTriple& t, const CheckOptions& options = {});
/// forward(backward(O)) compared with O through phi+ = id, phi- = P^T.
CorrespondenceWitness roundtrip_check(const GjspObject& o, const CheckOptions& options = {});

/// instr(L, M) as a subalgebra with M and b restricted. When b is nondegenerate on
/// it, this complements the kernel and is isomorphic to the faithful quotient.
/// Throws PreconditionError if the restricted form is degenerate.
MetricModuleTriple faithful_quotient(const MetricModuleTriple& t, const CheckOptions& options = {});

/// (phi_0, phi_M) over an entry type E.
template <class E>
struct TripleMap {
  BasicMatrix<E> algebra;
  BasicMatrix<E> module;
};

inline std::optional<Matrix> inverse_over(const Matrix& m) { return inverse(m); }
std::optional<RingMatrix> inverse_over(const RingMatrix& m);

template <class E>
BasicMatrix<E> lift(const Matrix& m) {
  BasicMatrix<E> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = E(m(i, j));
  }
  return out;
}

/// Checks phi : T1 -> T2 ("even", "lie_homomorphism", "equivariance", "form",
/// "invertible"). Equivariance is phi_M(x . v) = phi_0(x) . phi_M(v).
template <class E>
Report check_triple_iso(const MetricModuleTriple& t1, const MetricModuleTriple& t2, const TripleMap<E>& phi,
                        const CheckOptions& options = {}) {
  const std::size_t n1 = t1.algebra->dim(), n2 = t2.algebra->dim();
  const std::size_t m1 = t1.module.dim(), m2 = t2.module.dim();
  if (phi.algebra.rows() != n2 || phi.algebra.cols() != n1 || phi.module.rows() != m2 || phi.module.cols() != m1) {
    throw std::invalid_argument("triple map has the wrong shape");
  }
  auto ph = std::make_shared<const TripleMap<E>>(phi);
  auto a = std::make_shared<const MetricModuleTriple>(t1);
  auto b = std::make_shared<const MetricModuleTriple>(t2);
  std::vector<Identity> ids;
  ids.push_back({"even", {2, std::max(n1, m1)}, [ph, a, b](std::span<const std::size_t> t) {
                   const bool alg = t[0] == 0;
                   const SuperSpace& src = alg ? a->algebra->space() : a->module.space();
                   const SuperSpace& dst = alg ? b->algebra->space() : b->module.space();
                   const BasicMatrix<E>& m = alg ? ph->algebra : ph->module;
                   std::vector<E> off;
                   if (t[1] < src.dim()) {
                     for (std::size_t r = 0; r < dst.dim(); ++r) {
                       off.push_back(dst.parity(r) != src.parity(t[1]) ? m(r, t[1]) : E());
                     }
                   }
                   const Vector lhs = flatten(off);
                   return Identity::Sides{lhs, Vector(lhs.size())};
                 }});
  ids.push_back({"lie_homomorphism", {n1, n1}, [ph, a, b](std::span<const std::size_t> t) {
                   const auto& A = ph->algebra;
                   std::vector<E> inner;
                   for (const auto& x : a->algebra->bracket(t[0], t[1])) inner.push_back(E(x));
                   const std::vector<E> lhs = A * inner;
                   std::vector<E> rhs(A.rows());
                   for (const auto& [idx, c] : b->algebra->bracket_tensor().entries()) {
                     if (is_zero(A(idx[0], t[0])) || is_zero(A(idx[1], t[1]))) continue;
                     rhs[idx[2]] += A(idx[0], t[0]) * A(idx[1], t[1]) * E(c);
                   }
                   return Identity::Sides{flatten(lhs), flatten(rhs)};
                 }});
  ids.push_back({"equivariance", {n1}, [ph, a, b](std::span<const std::size_t> t) {
                   const BasicMatrix<E> lhs = ph->module * lift<E>(a->module.rho(t[0]));
                   BasicMatrix<E> image(b->module.dim(), b->module.dim());
                   for (std::size_t k = 0; k < b->algebra->dim(); ++k) {
                     const E& c = ph->algebra(k, t[0]);
                     if (!is_zero(c)) image = image + c * lift<E>(b->module.rho(k));
                   }
                   return Identity::Sides{flatten(lhs), flatten(image * ph->module)};
                 }});
  ids.push_back({"form", {n1, n1}, [ph, a, b](std::span<const std::size_t> t) {
                   const auto& A = ph->algebra;
                   E lhs;
                   for (std::size_t i = 0; i < A.rows(); ++i) {
                     if (is_zero(A(i, t[0]))) continue;
                     for (std::size_t j = 0; j < A.rows(); ++j) {
                       if (!is_zero(A(j, t[1])) && !b->form(i, j).is_zero()) {
                         lhs += A(i, t[0]) * E(b->form(i, j)) * A(j, t[1]);
                       }
                     }
                   }
                   Vector l, r;
                   flatten_into(l, lhs);
                   flatten_into(r, E(a->form(t[0], t[1])));
                   return Identity::Sides{l, r};
                 }});
  Report r = sweep_all(ids, options);
  r.add(single_result("invertible", is_invertible(phi.algebra) && is_invertible(phi.module)));
  return r;
}

/// phi_0(nu(f_i, v_j)) = nu(phi- f_i, phi+ v_j) on instr(V), phi_M = phi+.
template <class E>
TripleMap<E> pair_to_module(const InnerStructure& inner, const BasicPairMap<E>& phi) {
  const std::size_t k = inner.basis.size();
  const std::size_t nm = phi.minus.rows(), np = phi.plus.rows();
  BasicMatrix<E> alg(k, k);
  for (std::size_t a = 0; a < k; ++a) {
    const auto [i, j] = inner.basis_generators[a];
    for (std::size_t p = 0; p < nm; ++p) {
      if (is_zero(phi.minus(p, i))) continue;
      for (std::size_t q = 0; q < np; ++q) {
        if (is_zero(phi.plus(q, j))) continue;
        const E c = phi.minus(p, i) * phi.plus(q, j);
        const Vector& g = inner.generator(p, q);
        for (std::size_t r = 0; r < k; ++r) {
          if (!g[r].is_zero()) alg(r, a) += c * E(g[r]);
        }
      }
    }
  }
  return TripleMap<E>{alg, phi.plus};
}

/// phi+ = phi_M and phi- the pairing partner: <phi- f, phi+ v> = <f, v>.
/// nullopt if phi_M is not invertible.
template <class E>
std::optional<BasicPairMap<E>> module_to_pair(const PairingForm& pairing, const TripleMap<E>& phi) {
  const auto ip = inverse_over(phi.module);
  const auto pinv = inverse(pairing.matrix);
  if (!ip || !pinv) return std::nullopt;
  return BasicPairMap<E>{(lift<E>(pairing.matrix) * (*ip) * lift<E>(*pinv)).transpose(), phi.module};
}

enum class TransferDirection { pair_to_module, module_to_pair };

template <class E>
struct TransferResult {
  std::optional<BasicPairMap<E>> pair_map;
  std::optional<TripleMap<E>> triple_map;
  /// "source.*" membership of the input, "target.*" membership of the
  /// transferred map, and "involution" for the return trip.
  Report report;

  bool passed() const { return report.passed(); }
};

/// Pair to module: phi is an automorphism of O, the target is backward(O).
/// Module to pair: phi is an automorphism of T, the target is forward(T).
/// Transferring back and conjugating by the round-trip identification must
/// reproduce the input. Membership failures are reported, not thrown.
template <class E>
TransferResult<E> transfer_aut(const BasicPairMap<E>& phi, const GjspObject& o, const CheckOptions& options = {}) {
  TransferResult<E> out;
  out.report.append(check_pair_hom(phi, o.pair, o.pair, &o.pairing, &o.pairing, options), "source");
  if (!out.report.passed()) return out;
  const BackwardResult back = faulkner_backward(o, options);
  const TripleMap<E> psi = pair_to_module(back.inner, phi);
  out.triple_map = psi;
  out.report.append(check_triple_iso(back.triple, back.triple, psi, options), "target");
  // forward(backward(O)) has the canonical pairing; O maps onto it by (P^T, id).
  const GjspObject again = faulkner_forward(back.triple, options);
  const auto returned = module_to_pair(again.pairing, psi);
  bool same = false;
  std::vector<Witness> w;
  if (returned) {
    const auto pt_inv = inverse(o.pairing.matrix.transpose());
    const BasicMatrix<E> minus = lift<E>(*pt_inv) * returned->minus * lift<E>(o.pairing.matrix.transpose());
    same = minus == phi.minus && returned->plus == phi.plus;
    if (!same) w.push_back(Witness{{}, flatten(minus), flatten(phi.minus)});
  }
  out.report.add(single_result("involution", same, returned ? "" : "transferred module map is singular", w));
  out.pair_map = phi;
  return out;
}

template <class E>
TransferResult<E> transfer_aut(const TripleMap<E>& phi, const MetricModuleTriple& t, const CheckOptions& options = {}) {
  TransferResult<E> out;
  out.report.append(check_triple_iso(t, t, phi, options), "source");
  if (!out.report.passed()) return out;
  const GjspObject o = faulkner_forward(t, options);
  const auto pm = module_to_pair(o.pairing, phi);
  if (!pm) {
    out.report.add(single_result("target.invertible", false, "module map is singular"));
    return out;
  }
  out.pair_map = *pm;
  out.report.append(check_pair_hom(*pm, o.pair, o.pair, &o.pairing, &o.pairing, options), "target");
  // backward(forward(T)) maps onto T through the bracket identification.
  const BackwardResult back = faulkner_backward(o, options);
  const TripleMap<E> psi = pair_to_module(back.inner, *pm);
  const Matrix alpha = backward_algebra_map(BracketTable(t), back.inner);
  const auto alpha_inv = inverse(alpha);
  bool same = false;
  std::vector<Witness> w;
  if (alpha_inv) {
    const BasicMatrix<E> alg = lift<E>(alpha) * psi.algebra * lift<E>(*alpha_inv);
    same = alg == phi.algebra && psi.module == phi.module;
    if (!same) w.push_back(Witness{{}, flatten(alg), flatten(phi.algebra)});
  }
  out.report.add(single_result("involution", same, alpha_inv ? "" : "bracket identification is singular", w));
  out.triple_map = phi;
  return out;
}

}  // namespace superpair
