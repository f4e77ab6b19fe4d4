#include "superpair/tensorops/tensorops.hpp"

#include <memory>

namespace superpair {

namespace {

// <x, y> for x in V^s and y in V^-s; for s = + this is <v, f> = eta_{f,v} <f, v>.
Scalar signed_pairing(const GjspObject& o, Sign s, std::size_t x, std::size_t y) {
  if (s == Sign::minus) return o.pairing.matrix(x, y);
  const Scalar& p = o.pairing.matrix(y, x);
  return apply_sign(eta(o.pair.parity(Sign::minus, y), o.pair.parity(Sign::plus, x)), p);
}

struct TensorTriple {
  BackwardResult first;
  BackwardResult second;
  MetricModuleTriple triple;
};

TensorTriple tensor_triple(const GjspObject& o1, const GjspObject& o2) {
  if (!(o1.pair.field() == o2.pair.field())) throw std::invalid_argument("tensor factors over different fields");
  BackwardResult b1 = faulkner_backward(o1);
  BackwardResult b2 = faulkner_backward(o2);
  const LieHandle l = direct_sum_algebras(b1.triple.algebra, b2.triple.algebra);
  SuperModule m = tensor_module(inflate(b1.triple.module, l, 0), inflate(b2.triple.module, l, b1.triple.algebra->dim()));
  Matrix form = block_diagonal(b1.triple.form, b2.triple.form);
  MetricModuleTriple t{l, std::move(m), std::move(form)};
  return TensorTriple{std::move(b1), std::move(b2), std::move(t)};
}

SparseTensor<4> tensor_from_operators(const Gjsp& shape, Sign s, const std::function<Matrix(std::size_t, std::size_t)>& d) {
  const std::size_t ns = shape.dim(s), no = shape.dim(opposite(s));
  std::vector<SparseTensor<4>::Entry> entries;
  for (std::size_t x = 0; x < ns; ++x) {
    for (std::size_t y = 0; y < no; ++y) {
      const Matrix m = d(x, y);
      for (std::size_t z = 0; z < ns; ++z) {
        for (std::size_t out = 0; out < ns; ++out) {
          if (!m(out, z).is_zero()) entries.push_back({{x, y, z, out}, m(out, z)});
        }
      }
    }
  }
  return SparseTensor<4>({ns, no, ns, ns}, std::move(entries));
}

Matrix gram_of(const Matrix& form, const std::vector<Vector>& basis) {
  Matrix g(basis.size(), basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const Vector fa = form.transpose() * basis[a];
    for (std::size_t c = 0; c < basis.size(); ++c) {
      Scalar s;
      for (std::size_t i = 0; i < fa.size(); ++i) s += fa[i] * basis[c][i];
      g(a, c) = s;
    }
  }
  return g;
}

bool homogeneous_basis(const std::vector<Vector>& basis, const SuperSpace& space, std::vector<Parity>& parities) {
  parities.clear();
  for (const auto& v : basis) {
    if (v.size() != space.dim() || is_zero_vector(v)) return false;
    const auto p = vector_parity(v, space);
    if (!p) return false;
    parities.push_back(*p);
  }
  return rank_of(basis, space.dim()) == basis.size();
}

}  // namespace

GjspObject gjsp_tensor(const GjspObject& o1, const GjspObject& o2) {
  const TensorTriple t = tensor_triple(o1, o2);
  const GjspObject forward = faulkner_forward(t.triple);
  const PairingForm q = tensor_pairing(o1.pairing, o2.pairing);
  return transport(forward, PairMap{q.matrix.transpose(), Matrix::identity(q.right.dim())});
}

GjspObject gjsp_tensor_closed_form(const GjspObject& o1, const GjspObject& o2) {
  const PairingForm q = tensor_pairing(o1.pairing, o2.pairing);
  const Gjsp shape = Gjsp::zero(o1.pair.field(), q.left, q.right);
  SparseTensor<4> prods[2];
  for (Sign s : {Sign::minus, Sign::plus}) {
    const Sign o = opposite(s);
    const std::size_t d2s = o2.pair.dim(s), d2o = o2.pair.dim(o);
    prods[s == Sign::minus ? 0 : 1] = tensor_from_operators(shape, s, [&](std::size_t x, std::size_t y) {
      const std::size_t x1 = x / d2s, x2 = x % d2s, y1 = y / d2o, y2 = y % d2o;
      const Parity px2 = o2.pair.parity(s, x2), py1 = o1.pair.parity(o, y1), py2 = o2.pair.parity(o, y2);
      const Matrix& d1 = o1.pair.D(s, x1, y1);
      const Matrix& d2 = o2.pair.D(s, x2, y2);
      const Scalar p2 = signed_pairing(o2, s, x2, y2);
      const Scalar p1 = signed_pairing(o1, s, x1, y1);
      Matrix first = kronecker(d1, Matrix::identity(d2s)) * p2;
      // Second term: sign depends on the parity of z1.
      Matrix second = kronecker(Matrix::identity(o1.pair.dim(s)), d2) * p1;
      for (std::size_t z = 0; z < second.cols(); ++z) {
        const Parity pz1 = o1.pair.parity(s, z / d2s);
        if (eta(pz1, px2) * eta(pz1, py2) < 0) {
          for (std::size_t r = 0; r < second.rows(); ++r) second(r, z) = -second(r, z);
        }
      }
      first += second;
      return eta(px2, py1) < 0 ? -first : first;
    });
  }
  return GjspObject{Gjsp(o1.pair.field(), q.left, q.right, prods[0], prods[1]), q};
}

Report verify_tensor_formulas(const GjspObject& o1, const GjspObject& o2, const CheckOptions& options) {
  const TensorTriple t = tensor_triple(o1, o2);
  const PairingForm q = tensor_pairing(o1.pairing, o2.pairing);
  const Matrix qt = q.matrix.transpose();
  Report r;

  // Item 1: f1 (x) f2 |-> <f1 (x) f2, .> intertwines V1- (x) V2- with the dual of M1 (x) M2.
  const auto& l = t.triple.algebra;
  const SuperModule minus_tensor =
      tensor_module(inflate(t.first.inner.minus_module, l, 0),
                    inflate(t.second.inner.minus_module, l, t.first.triple.algebra->dim()));
  const BracketTable table(t.triple);
  Identity pairing = module_map_identity(minus_tensor, table.dual(), qt);
  pairing.name = "pairing";
  r.add(sweep(pairing, options));

  // Item 2: generators of instr, in coordinates of L1 + L2.
  auto pt = std::make_shared<const TensorTriple>(t);
  auto ptab = std::make_shared<const BracketTable>(table);
  auto po1 = std::make_shared<const GjspObject>(o1);
  auto po2 = std::make_shared<const GjspObject>(o2);
  auto pqt = std::make_shared<const Matrix>(qt);
  r.add(sweep({"generators",
               {o1.pair.dim(Sign::minus), o2.pair.dim(Sign::minus), o1.pair.dim(Sign::plus), o2.pair.dim(Sign::plus)},
               [pt, ptab, po1, po2, pqt](std::span<const std::size_t> idx) {
                 const std::size_t f1 = idx[0], f2 = idx[1], v1 = idx[2], v2 = idx[3];
                 const std::size_t d2m = po2->pair.dim(Sign::minus), d2p = po2->pair.dim(Sign::plus);
                 const Vector lhs = ptab->bracket(pqt->column(f1 * d2m + f2),
                                                  unit_vector(po1->pair.dim(Sign::plus) * d2p, v1 * d2p + v2));
                 Vector rhs = scaled(pt->first.inner.generator(f1, v1), po2->pairing.matrix(f2, v2));
                 const Vector second = scaled(pt->second.inner.generator(f2, v2), po1->pairing.matrix(f1, v1));
                 rhs.insert(rhs.end(), second.begin(), second.end());
                 const int sg = eta(po2->pair.parity(Sign::minus, f2), po1->pair.parity(Sign::plus, v1));
                 return Identity::Sides{lhs, scaled(rhs, Scalar(sg))};
               }},
              options));

  // Item 3: triple products.
  const GjspObject constructed = transport(faulkner_forward(t.triple), PairMap{qt, Matrix::identity(q.right.dim())});
  auto pc = std::make_shared<const GjspObject>(constructed);
  auto pf = std::make_shared<const GjspObject>(gjsp_tensor_closed_form(o1, o2));
  for (Sign s : {Sign::minus, Sign::plus}) {
    const Sign o = opposite(s);
    r.add(sweep({std::string("products_") + sign_name(s), {constructed.pair.dim(s),
                                                            constructed.pair.dim(o), constructed.pair.dim(s)},
                 [pc, pf, s](std::span<const std::size_t> idx) {
                   return Identity::Sides{pc->pair.D(s, idx[0], idx[1]).column(idx[2]),
                                          pf->pair.D(s, idx[0], idx[1]).column(idx[2])};
                 }},
                options));
  }
  return r;
}

PairMap flip_map(const GjspObject& o1, const GjspObject& o2) {
  Matrix m[2];
  for (Sign s : {Sign::minus, Sign::plus}) {
    const std::size_t d1 = o1.pair.dim(s), d2 = o2.pair.dim(s);
    Matrix f(d1 * d2, d1 * d2);
    for (std::size_t a = 0; a < d1; ++a) {
      for (std::size_t b = 0; b < d2; ++b) f(b * d1 + a, a * d2 + b) = Scalar(eta(o1.pair.parity(s, a), o2.pair.parity(s, b)));
    }
    m[s == Sign::minus ? 0 : 1] = std::move(f);
  }
  return PairMap{m[0], m[1]};
}

GjspObject gjsp_tensor_right(const GjspObject& o1, const GjspObject& o2) {
  return transport(gjsp_tensor(o2, o1), flip_map(o1, o2));
}

GjspObject gjsp_direct_sum(const std::vector<GjspObject>& objects) {
  if (objects.empty()) throw std::invalid_argument("direct sum of an empty list");
  const Field field = objects.front().pair.field();
  std::vector<Parity> pm, pp;
  for (const auto& o : objects) {
    if (!(o.pair.field() == field)) throw std::invalid_argument("direct sum over different fields");
    for (auto p : o.pair.space(Sign::minus).parities()) pm.push_back(p);
    for (auto p : o.pair.space(Sign::plus).parities()) pp.push_back(p);
  }
  const std::size_t nm = pm.size(), np = pp.size();
  std::vector<SparseTensor<4>::Entry> em, ep;
  Matrix pairing(nm, np);
  std::size_t om = 0, op = 0;
  for (const auto& o : objects) {
    for (const auto& [i, v] : o.pair.product(Sign::minus).entries()) {
      em.push_back({{i[0] + om, i[1] + op, i[2] + om, i[3] + om}, v});
    }
    for (const auto& [i, v] : o.pair.product(Sign::plus).entries()) {
      ep.push_back({{i[0] + op, i[1] + om, i[2] + op, i[3] + op}, v});
    }
    for (std::size_t a = 0; a < o.pair.dim(Sign::minus); ++a) {
      for (std::size_t b = 0; b < o.pair.dim(Sign::plus); ++b) pairing(om + a, op + b) = o.pairing.matrix(a, b);
    }
    om += o.pair.dim(Sign::minus);
    op += o.pair.dim(Sign::plus);
  }
  SuperSpace minus(pm), plus(pp);
  return GjspObject{Gjsp(field, minus, plus, SparseTensor<4>({nm, np, nm, nm}, std::move(em)),
                         SparseTensor<4>({np, nm, np, np}, std::move(ep))),
                    PairingForm(minus, plus, pairing)};
}

GjspObject onedim_object(const ShiftParameter& alpha, const Field& field) {
  const Scalar lambda = field.normalize(alpha.lambda);
  const SuperSpace s(std::vector<Parity>{alpha.a});
  const Scalar sign = field.normalize(Scalar(alpha.a ? -1 : 1));
  std::vector<SparseTensor<4>::Entry> minus, plus;
  if (!lambda.is_zero()) {
    minus.push_back({{0, 0, 0, 0}, sign * lambda});
    plus.push_back({{0, 0, 0, 0}, lambda});
  }
  return GjspObject{Gjsp(field, s, s, SparseTensor<4>({1, 1, 1, 1}, std::move(minus)),
                         SparseTensor<4>({1, 1, 1, 1}, std::move(plus))),
                    PairingForm(s, s, Matrix(1, 1, sign))};
}

ShiftParameter onedim_parameter(const GjspObject& o) {
  if (o.pair.dim(Sign::minus) != 1 || o.pair.dim(Sign::plus) != 1) {
    throw std::invalid_argument("onedim_parameter needs a one-dimensional object");
  }
  const Scalar& p = o.pairing.matrix(0, 0);
  const Parity a = o.pair.parity(Sign::plus, 0);
  if (p.is_zero()) throw std::invalid_argument("onedim_parameter needs a nonzero pairing");
  if (o.pair.parity(Sign::minus, 0) != a) throw std::invalid_argument("mixed parity with a nonzero pairing");
  // Rescale f so that <v, f> = eta_a <f, v> = 1.
  const Scalar c = apply_sign(sign(a), p);
  return ShiftParameter{o.pair.D(Sign::plus, 0, 0)(0, 0) * c.inverse(), a};
}

GjspObject tensor_shift(const GjspObject& o, const ShiftParameter& alpha) {
  const Field& field = o.pair.field();
  const Scalar lambda = field.normalize(alpha.lambda);
  const Parity a = alpha.a;
  const SuperSpace minus = o.pair.space(Sign::minus).shifted(a);
  const SuperSpace plus = o.pair.space(Sign::plus).shifted(a);
  SparseTensor<4> prods[2];
  for (Sign s : {Sign::minus, Sign::plus}) {
    const Sign op = opposite(s);
    const std::size_t n = o.pair.dim(s);
    prods[s == Sign::minus ? 0 : 1] = tensor_from_operators(o.pair, s, [&](std::size_t x, std::size_t y) {
      Matrix d = o.pair.D(s, x, y) + Matrix::identity(n) * (lambda * signed_pairing(o, s, x, y));
      int sg = eta(a, o.pair.parity(op, y));
      if (s == Sign::minus) sg *= sign(a);
      return sg < 0 ? -d : d;
    });
  }
  Matrix p = o.pairing.matrix;
  for (std::size_t f = 0; f < p.rows(); ++f) {
    if (sign(a) * eta(a, o.pair.parity(Sign::minus, f)) < 0) {
      for (std::size_t v = 0; v < p.cols(); ++v) p(f, v) = -p(f, v);
    }
  }
  return GjspObject{Gjsp(field, minus, plus, prods[0], prods[1]), PairingForm(minus, plus, p)};
}

std::optional<PairMap> pairing_fixing_map(const GjspObject& source, const GjspObject& target) {
  if (source.pair.dim(Sign::plus) != target.pair.dim(Sign::plus)) return std::nullopt;
  const Matrix id = Matrix::identity(source.pair.dim(Sign::plus));
  const auto minus = pairing_partner(source.pairing, target.pairing, id);
  if (!minus) return std::nullopt;
  return PairMap{*minus, id};
}

Report verify_shift(const GjspObject& o, const ShiftParameter& alpha) {
  const GjspObject closed = tensor_shift(o, alpha);
  const GjspObject built = gjsp_tensor(o, onedim_object(alpha, o.pair.field()));
  Report r;
  r.append(check_pair_hom(identity_map(o.pair), closed.pair, built.pair, &closed.pairing, &built.pairing),
           "matches_tensor");
  r.add(single_result("matches_tensor.parities", closed.pair.space(Sign::minus) == built.pair.space(Sign::minus) &&
                                                     closed.pair.space(Sign::plus) == built.pair.space(Sign::plus)));
  return r;
}

Report verify_onedim_addition(const ShiftParameter& alpha, const ShiftParameter& beta, const Field& field) {
  const GjspObject t = gjsp_tensor(onedim_object(alpha, field), onedim_object(beta, field));
  const ShiftParameter expected{field.normalize(alpha.lambda + beta.lambda), add(alpha.a, beta.a)};
  const ShiftParameter got = onedim_parameter(t);
  Report r;
  r.add(single_result("parameter", got == expected, "got " + got.to_string() + ", expected " + expected.to_string()));
  const GjspObject target = onedim_object(expected, field);
  const auto phi = pairing_fixing_map(target, t);
  if (!phi) {
    r.add(single_result("iso.invertible", false, "pairing is singular"));
    return r;
  }
  r.append(check_pair_hom(*phi, target.pair, t.pair, &target.pairing, &t.pairing), "iso");
  return r;
}

Report verify_shift_composition(const GjspObject& o, const ShiftParameter& alpha, const ShiftParameter& beta,
                                const CheckOptions& options) {
  const GjspObject twice = tensor_shift(tensor_shift(o, alpha), beta);
  const GjspObject once = tensor_shift(o, alpha + beta);
  Report r;
  const auto phi = pairing_fixing_map(twice, once);
  if (!phi) {
    r.add(single_result("iso.invertible", false, "pairing is singular"));
    return r;
  }
  r.append(check_pair_hom(*phi, twice.pair, once.pair, &twice.pairing, &once.pairing, options), "iso");
  return r;
}

PairMap tensor_map(const PairMap& phi1, const PairMap& phi2) {
  return PairMap{kronecker(phi1.minus, phi2.minus), kronecker(phi1.plus, phi2.plus)};
}

Report verify_aut_tensor(const PairMap& phi1, const PairMap& phi2, const GjspObject& o1, const GjspObject& o2,
                         const CheckOptions& options) {
  Report r;
  r.append(check_pair_hom(phi1, o1.pair, o1.pair, &o1.pairing, &o1.pairing, options), "factor1");
  r.append(check_pair_hom(phi2, o2.pair, o2.pair, &o2.pairing, &o2.pairing, options), "factor2");
  if (!r.passed()) return r;
  const GjspObject t = gjsp_tensor(o1, o2);
  r.append(check_pair_hom(tensor_map(phi1, phi2), t.pair, t.pair, &t.pairing, &t.pairing, options), "tensor");
  return r;
}

Factorization tensor_factorize(const GjspObject& o, const FactorSplit& split, const CheckOptions& options) {
  const BackwardResult back = faulkner_backward(o, options);
  const LieHandle& l = back.triple.algebra;
  const SuperModule& m = back.triple.module;
  const Matrix& b = back.triple.form;
  const std::size_t dl = l->dim();
  Report pre;

  std::vector<Parity> p1, p2, pw;
  const bool h1 = homogeneous_basis(split.l1, l->space(), p1);
  const bool h2 = homogeneous_basis(split.l2, l->space(), p2);
  std::vector<Vector> both = split.l1;
  both.insert(both.end(), split.l2.begin(), split.l2.end());
  pre.add(single_result("decomposition", h1 && h2 && both.size() == dl && rank_of(both, dl) == dl,
                        "L1 and L2 need homogeneous independent bases spanning L together"));
  if (!pre.passed()) throw PreconditionError("invalid split", pre);

  for (int k = 0; k < 2; ++k) {
    const auto& basis = k == 0 ? split.l1 : split.l2;
    const SpanSolver solver(basis, dl);
    bool ok = true;
    std::vector<Witness> w;
    for (std::size_t x = 0; x < dl && ok; ++x) {
      for (std::size_t y = 0; y < basis.size() && ok; ++y) {
        const Vector br = l->ad(x) * basis[y];
        if (!solver.coordinates(br)) {
          ok = false;
          w.push_back(Witness{{x, y}, br, Vector{}});
        }
      }
    }
    pre.add(single_result(k == 0 ? "ideal_1" : "ideal_2", ok, "", w));
  }
  const Matrix cross = from_columns(split.l1, dl).transpose() * b * from_columns(split.l2, dl);
  pre.add(single_result("orthogonal", cross.is_zero()));

  const std::size_t dm = m.dim();
  const bool hw = homogeneous_basis(split.w, m.space(), pw);
  pre.add(single_result("w_basis", hw && !split.w.empty(), "W needs a nonempty homogeneous independent basis"));
  if (!pre.passed()) throw PreconditionError("invalid split: " + pre.failures().front(), pre);

  const LieHandle s = subalgebra(l, split.l1);
  const LieHandle t = subalgebra(l, split.l2);
  const SuperModule ms = restrict_module(m, s, split.l1);
  const SuperModule mt = restrict_module(m, t, split.l2);

  const SpanSolver wsolver(split.w, dm);
  std::vector<Matrix> rho_w;
  bool submodule = true;
  for (std::size_t i = 0; i < s->dim() && submodule; ++i) {
    Matrix r(split.w.size(), split.w.size());
    for (std::size_t j = 0; j < split.w.size() && submodule; ++j) {
      const auto c = wsolver.coordinates(ms.rho(i) * split.w[j]);
      if (!c) {
        submodule = false;
        break;
      }
      for (std::size_t k = 0; k < c->size(); ++k) r(k, j) = (*c)[k];
    }
    rho_w.push_back(std::move(r));
  }
  pre.add(single_result("submodule", submodule, submodule ? "" : "W is not stable under L1"));
  if (!pre.passed()) throw PreconditionError("W is not an L1-submodule", pre);

  const SuperSpace wspace(pw);
  const SuperModule wmod = SuperModule::from_matrices(s, wspace, rho_w);
  const SuperModule trivial(make_lie(l->field(), SuperSpace(), {}), wspace, {});
  const HomSpace end = hom_fixed(wmod, wmod, trivial);
  pre.add(single_result("absolutely_irreducible", end.maps.size() == 1,
                        "dim End_L1(W) = " + std::to_string(end.maps.size())));
  const HomSpace hom = hom_fixed(wmod, ms, mt);
  pre.add(single_result("dimension", hom.maps.size() * wspace.dim() == dm,
                        "dim Hom = " + std::to_string(hom.maps.size()) + ", dim W = " + std::to_string(wspace.dim()) +
                            ", dim V+ = " + std::to_string(dm)));
  if (!pre.passed()) throw PreconditionError("W is not absolutely irreducible: " + pre.failures().front(), pre);

  const MetricModuleTriple t1{s, wmod, gram_of(b, split.l1)};
  const MetricModuleTriple t2{t, hom.t_module, gram_of(b, split.l2)};
  GjspObject first = faulkner_forward(t1, options);
  GjspObject second = faulkner_forward(t2, options);
  const GjspObject tens = gjsp_tensor(first, second);

  // w (x) f |-> eta_{w,f} f(w).
  const std::size_t dh = hom.maps.size();
  Matrix plus(dm, wspace.dim() * dh);
  for (std::size_t w = 0; w < wspace.dim(); ++w) {
    for (std::size_t h = 0; h < dh; ++h) {
      const Vector image = hom.maps[h].column(w);
      const int sg = eta(wspace.parity(w), hom.space.parity(h));
      for (std::size_t r = 0; r < dm; ++r) plus(r, w * dh + h) = apply_sign(sg, image[r]);
    }
  }
  const auto minus = pairing_partner(tens.pairing, o.pairing, plus);
  Report report;
  PairMap iso;
  if (!minus) {
    report.add(single_result("invertible", false, "evaluation map is singular"));
  } else {
    iso = PairMap{*minus, plus};
    report = check_pair_hom(iso, tens.pair, o.pair, &tens.pairing, &o.pairing, options);
  }
  return Factorization{std::move(first), std::move(second), std::move(iso), std::move(report)};
}

}  // namespace superpair
