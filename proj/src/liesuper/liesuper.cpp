#include "superpair/liesuper/liesuper.hpp"

#include <algorithm>

namespace superpair {

namespace {

std::vector<Matrix> matrices_from_tensor(const SparseTensor<3>& t, std::size_t count, std::size_t dim) {
  std::vector<Matrix> out(count, Matrix(dim, dim));
  for (const auto& [idx, value] : t.entries()) out[idx[0]](idx[2], idx[1]) = value;
  return out;
}

SparseTensor<3> tensor_from_matrices(const std::vector<Matrix>& mats, std::size_t dim) {
  std::vector<SparseTensor<3>::Entry> entries;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (mats[i].rows() != dim || mats[i].cols() != dim) throw std::invalid_argument("operator shape mismatch");
    for (std::size_t k = 0; k < dim; ++k) {
      for (std::size_t j = 0; j < dim; ++j) {
        if (!mats[i](k, j).is_zero()) entries.push_back({{i, j, k}, mats[i](k, j)});
      }
    }
  }
  return SparseTensor<3>({mats.size(), dim, dim}, std::move(entries));
}

// Coordinates whose parity disagrees with `expected`.
Vector off_parity_part(const Vector& v, const SuperSpace& space, Parity expected) {
  Vector out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (space.parity(k) != expected) out[k] = v[k];
  }
  return out;
}

Vector matrix_to_vector(const Matrix& m) { return m.flat(); }

Matrix supercommutator(const Matrix& a, Parity pa, const Matrix& b, Parity pb) {
  return a * b - apply_sign(eta(pa, pb), Scalar(1)) * (b * a);
}

}  // namespace

LieSuperAlgebra::LieSuperAlgebra(Field field, SuperSpace space, SparseTensor<3> bracket)
    : field_(field), space_(std::move(space)), bracket_(std::move(bracket)) {
  const auto n = space_.dim();
  if (bracket_.extents() != SparseTensor<3>::Index{n, n, n}) {
    if (!bracket_.empty()) throw std::invalid_argument("bracket tensor extents do not match the algebra dimension");
    bracket_ = SparseTensor<3>({n, n, n}, {});
  }
  ad_ = matrices_from_tensor(bracket_, n, n);
}

LieSuperAlgebra LieSuperAlgebra::from_ad(Field field, SuperSpace space, const std::vector<Matrix>& ad) {
  const auto n = space.dim();
  if (ad.size() != n) throw std::invalid_argument("need one ad matrix per basis element");
  return LieSuperAlgebra(field, std::move(space), tensor_from_matrices(ad, n));
}

Vector LieSuperAlgebra::bracket(const Vector& x, const Vector& y) const {
  Vector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    axpy(out, x[i], ad_[i] * y);
  }
  return out;
}

bool LieSuperAlgebra::same_as(const LieSuperAlgebra& other) const {
  return field_ == other.field_ && space_ == other.space_ && bracket_ == other.bracket_;
}

LieHandle make_lie(Field field, SuperSpace space, SparseTensor<3> bracket) {
  return std::make_shared<const LieSuperAlgebra>(field, std::move(space), std::move(bracket));
}

SuperModule::SuperModule(LieHandle algebra, SuperSpace space, SparseTensor<3> action)
    : algebra_(std::move(algebra)), space_(std::move(space)), action_(std::move(action)) {
  if (!algebra_) throw std::invalid_argument("module needs an algebra");
  const SparseTensor<3>::Index ext{algebra_->dim(), space_.dim(), space_.dim()};
  if (action_.extents() != ext) {
    if (!action_.empty()) throw std::invalid_argument("action tensor extents do not match");
    action_ = SparseTensor<3>(ext, {});
  }
  rho_ = matrices_from_tensor(action_, algebra_->dim(), space_.dim());
}

SuperModule SuperModule::from_matrices(LieHandle algebra, SuperSpace space, const std::vector<Matrix>& rho) {
  if (!algebra || rho.size() != algebra->dim()) throw std::invalid_argument("need one operator per basis element");
  auto t = tensor_from_matrices(rho, space.dim());
  return SuperModule(std::move(algebra), std::move(space), std::move(t));
}

Matrix SuperModule::rho(const Vector& x) const {
  Matrix m(dim(), dim());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) m += x[i] * rho_[i];
  }
  return m;
}

bool same_algebra(const LieHandle& a, const LieHandle& b) { return a == b || (a && b && a->same_as(*b)); }

std::vector<Identity> lie_identities(const LieHandle& algebra) {
  const auto n = algebra->dim();
  std::vector<Identity> ids;
  ids.push_back({"parity", {n, n}, [algebra](std::span<const std::size_t> t) {
                   const auto& sp = algebra->space();
                   Vector v = off_parity_part(algebra->bracket(t[0], t[1]), sp, add(sp.parity(t[0]), sp.parity(t[1])));
                   return Identity::Sides{v, Vector(v.size())};
                 }});
  ids.push_back({"anticommutativity", {n, n}, [algebra](std::span<const std::size_t> t) {
                   const auto& sp = algebra->space();
                   const int s = -eta(sp.parity(t[0]), sp.parity(t[1]));
                   return Identity::Sides{algebra->bracket(t[0], t[1]), scaled(algebra->bracket(t[1], t[0]), Scalar(s))};
                 }});
  ids.push_back({"jacobi", {n, n, n}, [algebra](std::span<const std::size_t> t) {
                   const auto& A = *algebra;
                   const auto& sp = A.space();
                   const Vector lhs = A.ad(t[0]) * A.bracket(t[1], t[2]);
                   Vector rhs = A.bracket(A.bracket(t[0], t[1]), unit_vector(A.dim(), t[2]));
                   axpy(rhs, Scalar(eta(sp.parity(t[0]), sp.parity(t[1]))), A.ad(t[1]) * A.bracket(t[0], t[2]));
                   return Identity::Sides{lhs, rhs};
                 }});
  return ids;
}

Report check_lie_axioms(const LieHandle& algebra, const CheckOptions& options) {
  return sweep_all(lie_identities(algebra), options);
}

std::vector<Identity> module_identities(const SuperModule& module) {
  auto m = std::make_shared<const SuperModule>(module);
  const auto n = m->algebra()->dim();
  std::vector<Identity> ids;
  ids.push_back({"parity", {n, m->dim()}, [m](std::span<const std::size_t> t) {
                   const auto& L = *m->algebra();
                   Vector v = off_parity_part(m->rho(t[0]).column(t[1]), m->space(),
                                              add(L.space().parity(t[0]), m->space().parity(t[1])));
                   return Identity::Sides{v, Vector(v.size())};
                 }});
  ids.push_back({"representation", {n, n}, [m](std::span<const std::size_t> t) {
                   const auto& L = *m->algebra();
                   const Matrix lhs = m->rho(L.bracket(t[0], t[1]));
                   const Matrix rhs = supercommutator(m->rho(t[0]), L.space().parity(t[0]), m->rho(t[1]),
                                                      L.space().parity(t[1]));
                   return Identity::Sides{matrix_to_vector(lhs), matrix_to_vector(rhs)};
                 }});
  return ids;
}

Report check_module(const SuperModule& module, const CheckOptions& options) {
  return sweep_all(module_identities(module), options);
}

std::vector<Identity> form_identities(const LieHandle& algebra, const Matrix& form) {
  auto b = std::make_shared<const Matrix>(form);
  const auto n = algebra->dim();
  if (form.rows() != n || form.cols() != n) throw std::invalid_argument("form matrix does not match the algebra");
  std::vector<Identity> ids;
  ids.push_back({"homogeneous", {n, n}, [algebra, b](std::span<const std::size_t> t) {
                   const auto& sp = algebra->space();
                   const bool mixed = sp.parity(t[0]) != sp.parity(t[1]);
                   return Identity::Sides{Vector{mixed ? (*b)(t[0], t[1]) : Scalar(0)}, Vector{Scalar(0)}};
                 }});
  ids.push_back({"invariant", {n, n, n}, [algebra, b](std::span<const std::size_t> t) {
                   // b([x_i, x_j], x_k) = b(x_i, [x_j, x_k])
                   const Vector xy = algebra->bracket(t[0], t[1]);
                   const Vector yz = algebra->bracket(t[1], t[2]);
                   Scalar lhs, rhs;
                   for (std::size_t k = 0; k < xy.size(); ++k) {
                     if (!xy[k].is_zero()) lhs += xy[k] * (*b)(k, t[2]);
                     if (!yz[k].is_zero()) rhs += (*b)(t[0], k) * yz[k];
                   }
                   return Identity::Sides{Vector{lhs}, Vector{rhs}};
                 }});
  ids.push_back({"supersymmetric", {n, n}, [algebra, b](std::span<const std::size_t> t) {
                   const auto& sp = algebra->space();
                   return Identity::Sides{Vector{(*b)(t[0], t[1])},
                                          Vector{apply_sign(eta(sp.parity(t[0]), sp.parity(t[1])), (*b)(t[1], t[0]))}};
                 }});
  return ids;
}

Report check_form_b(const LieHandle& algebra, const Matrix& form, const CheckOptions& options) {
  Report r = sweep_all(form_identities(algebra, form), options);
  const auto kernel = nullspace(form);
  if (kernel.empty()) {
    r.add(single_result("nondegenerate", true));
  } else {
    r.add(single_result("nondegenerate", false, "kernel vector of the Gram matrix",
                        {Witness{{}, kernel.front(), form * kernel.front()}}));
  }
  return r;
}

Report check_triple(const MetricModuleTriple& triple, const CheckOptions& options) {
  Report r;
  r.append(check_lie_axioms(triple.algebra, options), "lie");
  r.append(check_module(triple.module, options), "module");
  r.append(check_form_b(triple.algebra, triple.form, options), "form");
  return r;
}

namespace {

SuperModule dual_module(const SuperModule& m, bool left) {
  const auto& L = *m.algebra();
  std::vector<Matrix> rho;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    const Matrix& r = m.rho(i);
    Matrix d(m.dim(), m.dim());
    const Parity px = L.space().parity(i);
    for (std::size_t j = 0; j < m.dim(); ++j) {
      for (std::size_t k = 0; k < m.dim(); ++k) {
        // coefficient of f_k in x_i . f_j is (x_i . f_j)(v_k)
        if (r(j, k).is_zero()) continue;
        const Parity other = left ? m.space().parity(j) : m.space().parity(k);
        d(k, j) = apply_sign(-eta(px, other), r(j, k));
      }
    }
    rho.push_back(std::move(d));
  }
  return SuperModule::from_matrices(m.algebra(), m.space(), rho);
}

void require_same_algebra(const SuperModule& m, const SuperModule& n) {
  if (!same_algebra(m.algebra(), n.algebra())) throw AlgebraMismatch("modules are over different algebras");
}

}  // namespace

SuperModule dual_module_left(const SuperModule& m) { return dual_module(m, true); }
SuperModule dual_module_right(const SuperModule& m) { return dual_module(m, false); }

SuperModule tensor_module(const SuperModule& m, const SuperModule& n) {
  require_same_algebra(m, n);
  const auto& L = *m.algebra();
  const std::size_t dm = m.dim();
  const std::size_t dn = n.dim();
  std::vector<Matrix> rho;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    Matrix t(dm * dn, dm * dn);
    const Matrix& rm = m.rho(i);
    const Matrix& rn = n.rho(i);
    const Parity px = L.space().parity(i);
    for (std::size_t a = 0; a < dm; ++a) {
      for (std::size_t b = 0; b < dn; ++b) {
        const std::size_t col = a * dn + b;
        for (std::size_t a2 = 0; a2 < dm; ++a2) {
          if (!rm(a2, a).is_zero()) t(a2 * dn + b, col) += rm(a2, a);
        }
        const int s = eta(px, m.space().parity(a));
        for (std::size_t b2 = 0; b2 < dn; ++b2) {
          if (!rn(b2, b).is_zero()) t(a * dn + b2, col) += apply_sign(s, rn(b2, b));
        }
      }
    }
    rho.push_back(std::move(t));
  }
  return SuperModule::from_matrices(m.algebra(), m.space().tensor(n.space()), rho);
}

SuperModule direct_sum_modules(const SuperModule& m, const SuperModule& n) {
  require_same_algebra(m, n);
  std::vector<Matrix> rho;
  for (std::size_t i = 0; i < m.algebra()->dim(); ++i) rho.push_back(block_diagonal(m.rho(i), n.rho(i)));
  return SuperModule::from_matrices(m.algebra(), m.space().direct_sum(n.space()), rho);
}

SuperModule hom_module(const SuperModule& m, const SuperModule& n) {
  require_same_algebra(m, n);
  const auto& L = *m.algebra();
  const std::size_t dm = m.dim();
  const std::size_t dn = n.dim();
  std::vector<Parity> parities;
  for (std::size_t t = 0; t < dn; ++t) {
    for (std::size_t s = 0; s < dm; ++s) parities.push_back(add(n.space().parity(t), m.space().parity(s)));
  }
  std::vector<Matrix> rho;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    Matrix h(dn * dm, dn * dm);
    const Parity px = L.space().parity(i);
    for (std::size_t t = 0; t < dn; ++t) {
      for (std::size_t s = 0; s < dm; ++s) {
        const std::size_t col = t * dm + s;
        // x . E_ts = rho_N(x) E_ts - eta_{x,f} E_ts rho_M(x)
        for (std::size_t t2 = 0; t2 < dn; ++t2) {
          if (!n.rho(i)(t2, t).is_zero()) h(t2 * dm + s, col) += n.rho(i)(t2, t);
        }
        const int sg = -eta(px, parities[col]);
        for (std::size_t s2 = 0; s2 < dm; ++s2) {
          if (!m.rho(i)(s, s2).is_zero()) h(t * dm + s2, col) += apply_sign(sg, m.rho(i)(s, s2));
        }
      }
    }
    rho.push_back(std::move(h));
  }
  return SuperModule::from_matrices(m.algebra(), SuperSpace(parities), rho);
}

LieHandle direct_sum_algebras(const LieHandle& a, const LieHandle& b) {
  if (!(a->field() == b->field())) throw std::invalid_argument("direct sum over different fields");
  const std::size_t na = a->dim();
  const std::size_t n = na + b->dim();
  std::vector<SparseTensor<3>::Entry> entries;
  for (const auto& [idx, v] : a->bracket_tensor().entries()) entries.push_back({idx, v});
  for (const auto& [idx, v] : b->bracket_tensor().entries()) {
    entries.push_back({{idx[0] + na, idx[1] + na, idx[2] + na}, v});
  }
  return make_lie(a->field(), a->space().direct_sum(b->space()), SparseTensor<3>({n, n, n}, std::move(entries)));
}

SuperModule inflate(const SuperModule& m, const LieHandle& sum, std::size_t offset) {
  std::vector<Matrix> rho(sum->dim(), Matrix(m.dim(), m.dim()));
  for (std::size_t i = 0; i < m.algebra()->dim(); ++i) rho.at(offset + i) = m.rho(i);
  return SuperModule::from_matrices(sum, m.space(), rho);
}

MetricModuleTriple direct_sum(const std::vector<MetricModuleTriple>& triples) {
  if (triples.empty()) throw std::invalid_argument("direct sum of an empty list");
  if (triples.size() == 1) return triples.front();
  LieHandle algebra = triples.front().algebra;
  Matrix form = triples.front().form;
  for (std::size_t k = 1; k < triples.size(); ++k) {
    algebra = direct_sum_algebras(algebra, triples[k].algebra);
    form = block_diagonal(form, triples[k].form);
  }
  std::vector<Matrix> rho(algebra->dim());
  std::size_t total_m = 0;
  for (const auto& t : triples) total_m += t.module.dim();
  for (auto& r : rho) r = Matrix(total_m, total_m);
  SuperSpace space;
  std::size_t l_off = 0;
  std::size_t m_off = 0;
  for (const auto& t : triples) {
    for (std::size_t i = 0; i < t.algebra->dim(); ++i) {
      const Matrix& r = t.module.rho(i);
      for (std::size_t p = 0; p < r.rows(); ++p) {
        for (std::size_t q = 0; q < r.cols(); ++q) rho[l_off + i](m_off + p, m_off + q) = r(p, q);
      }
    }
    space = space.direct_sum(t.module.space());
    l_off += t.algebra->dim();
    m_off += t.module.dim();
  }
  return MetricModuleTriple{algebra, SuperModule::from_matrices(algebra, space, rho), form};
}

std::vector<Vector> representation_kernel(const SuperModule& m) {
  const auto& L = *m.algebra();
  const std::size_t d = m.dim() * m.dim();
  Matrix a(d, L.dim());
  for (std::size_t i = 0; i < L.dim(); ++i) {
    const auto& flat = m.rho(i).flat();
    for (std::size_t r = 0; r < d; ++r) a(r, i) = flat[r];
  }
  return graded_nullspace(a, L.space());
}

bool is_faithful(const SuperModule& m) { return representation_kernel(m).empty(); }

LieHandle subalgebra(const LieHandle& algebra, const std::vector<Vector>& basis) {
  const std::size_t n = algebra->dim();
  const SpanSolver solver(basis, n);
  std::vector<Parity> parities;
  for (const auto& v : basis) {
    auto p = vector_parity(v, algebra->space());
    if (!p) throw std::invalid_argument("subalgebra basis vectors must be parity-homogeneous");
    parities.push_back(*p);
  }
  const std::size_t k = basis.size();
  std::vector<SparseTensor<3>::Entry> entries;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      auto c = solver.coordinates(algebra->bracket(basis[a], basis[b]));
      if (!c) throw std::invalid_argument("span is not closed under the bracket");
      for (std::size_t j = 0; j < k; ++j) {
        if (!(*c)[j].is_zero()) entries.push_back({{a, b, j}, (*c)[j]});
      }
    }
  }
  return make_lie(algebra->field(), SuperSpace(parities), SparseTensor<3>({k, k, k}, std::move(entries)));
}

SuperModule restrict_module(const SuperModule& m, const LieHandle& sub, const std::vector<Vector>& basis) {
  std::vector<Matrix> rho;
  for (const auto& v : basis) rho.push_back(m.rho(v));
  return SuperModule::from_matrices(sub, m.space(), rho);
}

Identity module_map_identity(const SuperModule& a, const SuperModule& b, const Matrix& phi) {
  auto pa = std::make_shared<const SuperModule>(a);
  auto pb = std::make_shared<const SuperModule>(b);
  auto ph = std::make_shared<const Matrix>(phi);
  return {"equivariance", {a.algebra()->dim()}, [pa, pb, ph](std::span<const std::size_t> t) {
            return Identity::Sides{((*ph) * pa->rho(t[0])).flat(), (pb->rho(t[0]) * (*ph)).flat()};
          }};
}

HomSpace hom_fixed(const SuperModule& w, const SuperModule& v_s, const SuperModule& v_t) {
  if (!same_algebra(w.algebra(), v_s.algebra())) throw AlgebraMismatch("W and V must be modules over the same S");
  if (!(v_s.space() == v_t.space())) throw std::invalid_argument("S- and T-actions live on different spaces");
  const auto& S = *v_s.algebra();
  const auto& T = *v_t.algebra();
  for (std::size_t i = 0; i < S.dim(); ++i) {
    for (std::size_t j = 0; j < T.dim(); ++j) {
      if (!supercommutator(v_s.rho(i), S.space().parity(i), v_t.rho(j), T.space().parity(j)).is_zero()) {
        throw std::invalid_argument("the S- and T-actions do not commute");
      }
    }
  }
  const std::size_t dv = v_s.dim();
  const std::size_t dw = w.dim();
  std::vector<Matrix> maps;
  std::size_t even_count = 0;
  std::vector<Parity> parities;
  // f(s . w) = eta_{f,s} s . f(w), solved separately for each degree d of f.
  for (Parity d : {Parity{0}, Parity{1}}) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;  // (row in V, column in W)
    for (std::size_t r = 0; r < dv; ++r) {
      for (std::size_t c = 0; c < dw; ++c) {
        if (add(v_s.space().parity(r), w.space().parity(c)) == d) slots.push_back({r, c});
      }
    }
    Matrix sys(S.dim() * dv * dw, slots.size());
    for (std::size_t u = 0; u < slots.size(); ++u) {
      Matrix f(dv, dw);
      f(slots[u].first, slots[u].second) = Scalar(1);
      for (std::size_t i = 0; i < S.dim(); ++i) {
        const Matrix diff =
            f * w.rho(i) - apply_sign(eta(d, S.space().parity(i)), Scalar(1)) * (v_s.rho(i) * f);
        for (std::size_t q = 0; q < dv * dw; ++q) sys(i * dv * dw + q, u) = diff.flat()[q];
      }
    }
    for (const auto& x : nullspace(sys)) {
      Matrix f(dv, dw);
      for (std::size_t u = 0; u < slots.size(); ++u) f(slots[u].first, slots[u].second) = x[u];
      maps.push_back(std::move(f));
      parities.push_back(d);
    }
    if (d == 0) even_count = maps.size();
  }
  SuperSpace space(parities);
  const std::size_t h = maps.size();
  std::vector<Vector> flat_maps;
  for (const auto& f : maps) flat_maps.push_back(f.flat());
  const SpanSolver solver(flat_maps, dv * dw);
  std::vector<Matrix> rho;
  for (std::size_t j = 0; j < T.dim(); ++j) {
    Matrix act(h, h);
    for (std::size_t a = 0; a < h; ++a) {
      auto c = solver.coordinates((v_t.rho(j) * maps[a]).flat());
      if (!c) throw std::logic_error("T-action does not preserve Hom_S(W, V)");
      for (std::size_t b = 0; b < h; ++b) act(b, a) = (*c)[b];
    }
    rho.push_back(std::move(act));
  }
  SuperModule t_module = SuperModule::from_matrices(v_t.algebra(), space, rho);
  Matrix ev(dv, h * dw);
  for (std::size_t a = 0; a < h; ++a) {
    for (std::size_t b = 0; b < dw; ++b) {
      for (std::size_t r = 0; r < dv; ++r) ev(r, a * dw + b) = maps[a](r, b);
    }
  }
  SuperMap evaluation(space.tensor(w.space()), v_s.space(), std::move(ev));
  return HomSpace{space, std::move(maps), even_count, std::move(t_module), std::move(evaluation)};
}

}  // namespace superpair
