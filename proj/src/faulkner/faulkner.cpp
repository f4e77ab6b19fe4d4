#include "superpair/faulkner/faulkner.hpp"

#include <memory>

namespace superpair {

namespace {

std::string failure_list(const Report& r) {
  std::string s;
  for (const auto& name : r.failures()) s += (s.empty() ? "" : ", ") + name;
  return s;
}

// Sum over the homogeneous components of v (in M) and f (in M*) of [v, f].
Vector bracket_vf_vector(const BracketTable& t, const Vector& v, const Vector& f) {
  Vector out(t.triple().algebra->dim());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (!f[j].is_zero()) axpy(out, v[i] * f[j], t.bracket_vf(i, j));
    }
  }
  return out;
}

Scalar pairing_value(const Matrix& p, const Vector& minus, std::size_t plus) {
  Scalar s;
  for (std::size_t k = 0; k < minus.size(); ++k) {
    if (!minus[k].is_zero()) s += minus[k] * p(k, plus);
  }
  return s;
}

Matrix backward_gram(const GjspObject& o, const InnerStructure& inner) {
  const std::size_t k = inner.basis.size();
  Matrix b(k, k);
  for (std::size_t a = 0; a < k; ++a) {
    const auto [i, j] = inner.basis_generators[a];
    const Matrix& d = o.pair.D(Sign::minus, i, j);
    for (std::size_t c = 0; c < k; ++c) {
      const auto [g, w] = inner.basis_generators[c];
      b(a, c) = pairing_value(o.pairing.matrix, d.column(g), w);
    }
  }
  return b;
}

}  // namespace

BracketTable::BracketTable(const MetricModuleTriple& t)
    : triple_(t), dual_(dual_module_left(t.module)), dim_(t.module.dim()) {
  const std::size_t n = t.algebra->dim();
  if (t.form.rows() != n || t.form.cols() != n) throw std::invalid_argument("form has the wrong shape");
  auto inv = inverse(t.form);
  if (!inv) {
    Report r;
    r.add(single_result("form.nondegenerate", false, "Gram matrix of b is singular"));
    throw PreconditionError("b is degenerate", r);
  }
  gram_inverse_ = std::move(*inv);
  table_.reserve(dim_ * dim_);
  for (std::size_t f = 0; f < dim_; ++f) {
    for (std::size_t v = 0; v < dim_; ++v) {
      Vector rhs(n);
      for (std::size_t i = 0; i < n; ++i) rhs[i] = dual_.rho(i)(v, f);
      table_.push_back(gram_inverse_ * rhs);
    }
  }
}

Vector BracketTable::bracket_vf(std::size_t v, std::size_t f) const {
  const auto& s = triple_.module.space();
  Vector out = bracket(f, v);
  if (eta(s.parity(f), s.parity(v)) > 0) {
    for (auto& x : out) x = -x;
  }
  return out;
}

Vector BracketTable::bracket(const Vector& f, const Vector& v) const {
  Vector out(triple_.algebra->dim());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (!v[j].is_zero()) axpy(out, f[i] * v[j], bracket(i, j));
    }
  }
  return out;
}

Vector bracket_of(const MetricModuleTriple& t, const Vector& f, const Vector& v) { return BracketTable(t).bracket(f, v); }

std::vector<Identity> bracket_operator_identities(const BracketTable& table) {
  auto pt = std::make_shared<const BracketTable>(table);
  const std::size_t n = table.triple().module.dim();
  std::vector<Identity> ids;
  ids.push_back({"brackets_acting", {n, n, n, n}, [pt](std::span<const std::size_t> t) {
                   const auto& T = *pt;
                   const auto& L = *T.triple().algebra;
                   const auto& M = T.triple().module;
                   const auto& s = M.space();
                   const std::size_t f = t[0], v = t[1], g = t[2], w = t[3];
                   const std::size_t n = M.dim();
                   const Vector lhs = L.bracket(T.bracket(f, v), T.bracket(g, w));
                   const Vector dg = T.dual().act(T.bracket(f, v), unit_vector(n, g));
                   const Vector dw = M.act(T.bracket_vf(v, f), unit_vector(n, w));
                   Vector rhs = T.bracket(dg, unit_vector(n, w));
                   axpy(rhs, Scalar(-eta(s.parity(f), s.parity(v), s.parity(g))), T.bracket(unit_vector(n, g), dw));
                   return Identity::Sides{lhs, rhs};
                 }});
  ids.push_back({"brackets_acting_mirror", {n, n, n, n}, [pt](std::span<const std::size_t> t) {
                   const auto& T = *pt;
                   const auto& L = *T.triple().algebra;
                   const auto& M = T.triple().module;
                   const auto& s = M.space();
                   const std::size_t f = t[0], v = t[1], g = t[2], w = t[3];
                   const std::size_t n = M.dim();
                   const Vector lhs = L.bracket(T.bracket_vf(v, f), T.bracket_vf(w, g));
                   const Vector dw = M.act(T.bracket_vf(v, f), unit_vector(n, w));
                   const Vector dg = T.dual().act(T.bracket(f, v), unit_vector(n, g));
                   Vector rhs = bracket_vf_vector(T, dw, unit_vector(n, g));
                   axpy(rhs, Scalar(-eta(s.parity(v), s.parity(f), s.parity(w))),
                        bracket_vf_vector(T, unit_vector(n, w), dg));
                   return Identity::Sides{lhs, rhs};
                 }});
  return ids;
}

Report forward_preconditions(const MetricModuleTriple& t, const CheckOptions& options) {
  if (!same_algebra(t.algebra, t.module.algebra())) throw AlgebraMismatch("module is over a different algebra");
  Report r;
  r.append(check_module(t.module, options), "module");
  r.append(check_form_b(t.algebra, t.form, options), "form");
  return r;
}

GjspObject faulkner_forward(const MetricModuleTriple& t, const CheckOptions& options) {
  const Report pre = forward_preconditions(t, options);
  if (!pre.passed()) throw PreconditionError("forward construction precondition failed: " + failure_list(pre), pre);
  const BracketTable table(t);
  const auto& M = t.module;
  const auto& s = M.space();
  const std::size_t n = M.dim();
  std::vector<SparseTensor<4>::Entry> minus, plus;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Vector& y = table.bracket(a, b);
      const Matrix rd = table.dual().rho(y);
      const Matrix rm = M.rho(y);
      const bool flip = eta(s.parity(a), s.parity(b)) > 0;
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t out = 0; out < n; ++out) {
          if (!rd(out, c).is_zero()) minus.push_back({{a, b, c, out}, rd(out, c)});
          if (!rm(out, c).is_zero()) plus.push_back({{b, a, c, out}, flip ? -rm(out, c) : rm(out, c)});
        }
      }
    }
  }
  Gjsp pair(t.field(), s, s, SparseTensor<4>({n, n, n, n}, std::move(minus)),
            SparseTensor<4>({n, n, n, n}, std::move(plus)));
  return GjspObject{std::move(pair), PairingForm::canonical(s)};
}

InstrLM instr_LM(const MetricModuleTriple& t, const CheckOptions& options) {
  const BracketTable table(t);
  const auto& L = *t.algebra;
  const auto& M = t.module;
  const std::size_t n = M.dim(), dl = L.dim();
  std::vector<Vector> brackets;
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t v = 0; v < n; ++v) brackets.push_back(table.bracket(f, v));
  }
  InstrLM out;
  for (auto p : independent_columns(from_columns(brackets, dl))) out.basis.push_back(brackets[p]);
  out.kernel = representation_kernel(M);

  auto pt = std::make_shared<const BracketTable>(table);
  out.report.add(sweep({"ideal", {dl, n, n}, [pt](std::span<const std::size_t> idx) {
                          const auto& T = *pt;
                          const auto& A = *T.triple().algebra;
                          const auto& Mod = T.triple().module;
                          const std::size_t x = idx[0], f = idx[1], v = idx[2];
                          const Vector lhs = A.ad(x) * T.bracket(f, v);
                          Vector rhs = T.bracket(T.dual().rho(x).column(f), unit_vector(Mod.dim(), v));
                          axpy(rhs, Scalar(eta(A.space().parity(x), Mod.space().parity(f))),
                               T.bracket(unit_vector(Mod.dim(), f), Mod.rho(x).column(v)));
                          return Identity::Sides{lhs, rhs};
                        }},
                       options));
  const auto perp = orthogonal_complement(t.form, out.basis, &L.space());
  const bool kp = same_subspace(out.kernel, perp, dl);
  out.report.add(single_result("kernel_perp", kp, kp ? "" : "representation kernel differs from instr(L, M)^perp"));
  if (out.kernel.empty()) {
    out.report.add(single_result("full", out.basis.size() == dl,
                                 "dim instr(L, M) = " + std::to_string(out.basis.size()) + ", dim L = " +
                                     std::to_string(dl)));
    const GjspObject o = faulkner_forward(t, options);
    std::vector<Vector> nus, stacked;
    for (std::size_t f = 0; f < n; ++f) {
      for (std::size_t v = 0; v < n; ++v) {
        Vector g = nu(o.pair, f, v).flat();
        Vector s = brackets[f * n + v];
        s.insert(s.end(), g.begin(), g.end());
        nus.push_back(std::move(g));
        stacked.push_back(std::move(s));
      }
    }
    const std::size_t rb = rank_of(brackets, dl);
    const std::size_t rn = rank_of(nus, 2 * n * n);
    const std::size_t rs = rank_of(stacked, dl + 2 * n * n);
    out.report.add(single_result("instr_iso", rb == rn && rn == rs,
                                 "ranks: brackets " + std::to_string(rb) + ", nu " + std::to_string(rn) +
                                     ", joint " + std::to_string(rs)));
  }
  return out;
}

Report well_definedness_audit(const GjspObject& o, const InnerStructure& inner, const CheckOptions& options) {
  auto po = std::make_shared<const GjspObject>(o);
  auto pi = std::make_shared<const InnerStructure>(inner);
  auto gram = std::make_shared<const Matrix>(backward_gram(o, inner));
  const std::size_t nm = o.pair.dim(Sign::minus), np = o.pair.dim(Sign::plus);
  Report r;
  r.add(sweep({"well_definedness", {nm, np, nm, np}, [po, pi, gram](std::span<const std::size_t> t) {
                 const Scalar direct =
                     pairing_value(po->pairing.matrix, po->pair.D(Sign::minus, t[0], t[1]).column(t[2]), t[3]);
                 const Vector& a = pi->generator(t[0], t[1]);
                 const Vector& c = pi->generator(t[2], t[3]);
                 Scalar via;
                 for (std::size_t i = 0; i < a.size(); ++i) {
                   if (a[i].is_zero()) continue;
                   for (std::size_t j = 0; j < c.size(); ++j) {
                     if (!c[j].is_zero()) via += a[i] * (*gram)(i, j) * c[j];
                   }
                 }
                 return Identity::Sides{Vector{via}, Vector{direct}};
               }},
              options));
  return r;
}

BackwardResult faulkner_backward(const GjspObject& o, const CheckOptions& options) {
  const Report pre = check_object(o, options);
  if (!pre.passed()) throw PreconditionError("backward construction precondition failed: " + failure_list(pre), pre);
  InnerStructure inner = instr(o.pair);
  Report audit = well_definedness_audit(o, inner, options);
  if (!audit.passed()) {
    throw PreconditionError("well-definedness audit failed: the input pairing is not supersymmetric", audit);
  }
  MetricModuleTriple triple{inner.algebra, inner.plus_module, backward_gram(o, inner)};
  return BackwardResult{std::move(inner), std::move(triple), std::move(audit)};
}

Matrix backward_algebra_map(const BracketTable& table, const InnerStructure& inner) {
  std::vector<Vector> cols;
  for (const auto& [f, v] : inner.basis_generators) cols.push_back(table.bracket(f, v));
  return from_columns(cols, table.triple().algebra->dim());
}

CorrespondenceWitness roundtrip_check(const MetricModuleTriple& t, const CheckOptions& options) {
  if (!is_faithful(t.module)) {
    Report r;
    r.add(single_result("module.faithful", false, "representation kernel is nonzero"));
    throw PreconditionError("round trip needs a faithful module", r);
  }
  CorrespondenceWitness w;
  GjspObject o = faulkner_forward(t, options);
  BackwardResult back = faulkner_backward(o, options);
  w.algebra_map = backward_algebra_map(BracketTable(t), back.inner);
  w.module_map = Matrix::identity(t.module.dim());
  w.report = check_triple_iso(back.triple, t, TripleMap<Scalar>{w.algebra_map, w.module_map}, options);
  w.triple = t;
  w.object = std::move(o);
  w.triple_again = std::move(back.triple);
  return w;
}

CorrespondenceWitness roundtrip_check(const GjspObject& o, const CheckOptions& options) {
  CorrespondenceWitness w;
  BackwardResult back = faulkner_backward(o, options);
  GjspObject again = faulkner_forward(back.triple, options);
  w.pair_map = PairMap{o.pairing.matrix.transpose(), Matrix::identity(o.pair.dim(Sign::plus))};
  w.report = check_pair_hom(w.pair_map, o.pair, again.pair, &o.pairing, &again.pairing, options);
  w.object = o;
  w.triple = std::move(back.triple);
  w.object_again = std::move(again);
  return w;
}

MetricModuleTriple faithful_quotient(const MetricModuleTriple& t, const CheckOptions& options) {
  const InstrLM il = instr_LM(t, options);
  const std::size_t k = il.basis.size();
  Matrix gram(k, k);
  for (std::size_t a = 0; a < k; ++a) {
    const Vector ba = t.form.transpose() * il.basis[a];
    for (std::size_t c = 0; c < k; ++c) {
      Scalar s;
      for (std::size_t i = 0; i < ba.size(); ++i) s += ba[i] * il.basis[c][i];
      gram(a, c) = s;
    }
  }
  if (rank(gram) != k) {
    Report r;
    r.add(single_result("form.nondegenerate", false, "b restricted to instr(L, M) is degenerate"));
    throw PreconditionError("instr(L, M) does not split off the kernel", r);
  }
  LieHandle sub = subalgebra(t.algebra, il.basis);
  SuperModule m = restrict_module(t.module, sub, il.basis);
  return MetricModuleTriple{sub, std::move(m), std::move(gram)};
}

std::optional<RingMatrix> inverse_over(const RingMatrix& m) {
  for (const auto& x : m.flat()) {
    if (x.ring()) return inverse(m, *x.ring(), x.ring());
  }
  const auto inv = inverse(split(m).first);
  if (!inv) return std::nullopt;
  return to_ring(*inv);
}

}  // namespace superpair
