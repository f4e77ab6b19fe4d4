#include "superpair/gjsp/gjsp.hpp"

namespace superpair {

namespace {

std::vector<Matrix> build_operators(const SparseTensor<4>& t, std::size_t ns, std::size_t no) {
  std::vector<Matrix> ops(ns * no, Matrix(ns, ns));
  for (const auto& [idx, value] : t.entries()) ops[idx[0] * no + idx[1]](idx[3], idx[2]) = value;
  return ops;
}

SparseTensor<4> normalized(SparseTensor<4> t, std::size_t ns, std::size_t no) {
  const SparseTensor<4>::Index ext{ns, no, ns, ns};
  if (t.extents() == ext) return t;
  if (!t.empty()) throw std::invalid_argument("product tensor extents do not match the spaces");
  return SparseTensor<4>(ext, {});
}

Matrix supercommutator(const Matrix& a, Parity pa, const Matrix& b, Parity pb) {
  Matrix r = a * b;
  if (eta(pa, pb) < 0) {
    r += b * a;
  } else {
    r -= b * a;
  }
  return r;
}

// <a, e_w> for a vector a in V- and a basis vector of V+.
Scalar pair_left(const Matrix& p, const Vector& a, std::size_t w) {
  Scalar s;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!a[k].is_zero()) s += a[k] * p(k, w);
  }
  return s;
}

// <e_z, b> for a basis vector of V- and a vector b in V+.
Scalar pair_right(const Matrix& p, std::size_t z, const Vector& b) {
  Scalar s;
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (!b[k].is_zero()) s += p(z, k) * b[k];
  }
  return s;
}

}  // namespace

Gjsp::Gjsp(Field field, SuperSpace minus, SuperSpace plus, SparseTensor<4> minus_product, SparseTensor<4> plus_product)
    : field_(field),
      minus_(std::move(minus)),
      plus_(std::move(plus)),
      minus_product_(normalized(std::move(minus_product), minus_.dim(), plus_.dim())),
      plus_product_(normalized(std::move(plus_product), plus_.dim(), minus_.dim())) {
  d_minus_ = build_operators(minus_product_, minus_.dim(), plus_.dim());
  d_plus_ = build_operators(plus_product_, plus_.dim(), minus_.dim());
}

Gjsp Gjsp::zero(Field field, SuperSpace minus, SuperSpace plus) {
  return Gjsp(field, std::move(minus), std::move(plus), {}, {});
}

Matrix Gjsp::D(Sign s, const Vector& x, const Vector& y) const {
  Matrix m(dim(s), dim(s));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (!y[j].is_zero()) m += (x[i] * y[j]) * D(s, i, j);
    }
  }
  return m;
}

Matrix Gjsp::D_left_basis(Sign s, std::size_t x, const Vector& u) const {
  Matrix m(dim(s), dim(s));
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (!u[j].is_zero()) m += u[j] * D(s, x, j);
  }
  return m;
}

Matrix Gjsp::D_right_basis(Sign s, const Vector& u, std::size_t y) const {
  Matrix m(dim(s), dim(s));
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!u[i].is_zero()) m += u[i] * D(s, i, y);
  }
  return m;
}

Vector Gjsp::triple(Sign s, const Vector& x, const Vector& y, const Vector& z) const { return D(s, x, y) * z; }

std::vector<Identity> parity_identities(const Gjsp& v) {
  auto pv = std::make_shared<const Gjsp>(v);
  std::vector<Identity> ids;
  for (Sign s : {Sign::minus, Sign::plus}) {
    const Sign o = opposite(s);
    ids.push_back({std::string("parity_") + sign_name(s), {v.dim(s), v.dim(o), v.dim(s)},
                   [pv, s, o](std::span<const std::size_t> t) {
                     const Vector out = pv->D(s, t[0], t[1]).column(t[2]);
                     const Parity expected = add(add(pv->parity(s, t[0]), pv->parity(o, t[1])), pv->parity(s, t[2]));
                     Vector off(out.size());
                     for (std::size_t k = 0; k < out.size(); ++k) {
                       if (pv->parity(s, k) != expected) off[k] = out[k];
                     }
                     return Identity::Sides{off, Vector(off.size())};
                   }});
  }
  return ids;
}

std::vector<Identity> fundamental_identities(const Gjsp& v) {
  auto pv = std::make_shared<const Gjsp>(v);
  std::vector<Identity> ids;
  for (Sign s : {Sign::minus, Sign::plus}) {
    const Sign o = opposite(s);
    ids.push_back({std::string("fundamental_identity_") + sign_name(s), {v.dim(s), v.dim(o), v.dim(s), v.dim(o)},
                   [pv, s, o](std::span<const std::size_t> t) {
                     const auto& V = *pv;
                     const std::size_t x = t[0], y = t[1], z = t[2], w = t[3];
                     const Parity pxy = add(V.parity(s, x), V.parity(o, y));
                     const Parity pzw = add(V.parity(s, z), V.parity(o, w));
                     const Matrix& dxy = V.D(s, x, y);
                     const Matrix lhs = supercommutator(dxy, pxy, V.D(s, z, w), pzw);
                     Matrix rhs = V.D_right_basis(s, dxy.column(z), w);
                     const Matrix second = V.D_left_basis(s, z, V.D(o, y, x).column(w));
                     if (eta(V.parity(s, x), V.parity(o, y), V.parity(s, z)) < 0) {
                       rhs += second;
                     } else {
                       rhs -= second;
                     }
                     return Identity::Sides{lhs.flat(), rhs.flat()};
                   }});
  }
  return ids;
}

Report check_fundamental_identity(const Gjsp& v, const CheckOptions& options) {
  auto ids = parity_identities(v);
  for (auto& id : fundamental_identities(v)) ids.push_back(std::move(id));
  return sweep_all(ids, options);
}

std::vector<Identity> pairing_identities(const GjspObject& o) {
  auto po = std::make_shared<const GjspObject>(o);
  const auto& V = o.pair;
  const std::vector<std::size_t> ext{V.dim(Sign::minus), V.dim(Sign::plus), V.dim(Sign::minus), V.dim(Sign::plus)};
  std::vector<Identity> ids;
  using Fn = std::function<Identity::Sides(const GjspObject&, std::size_t, std::size_t, std::size_t, std::size_t)>;
  auto make = [&](const std::string& name, Fn fn) {
    ids.push_back({name, ext, [po, fn](std::span<const std::size_t> t) { return fn(*po, t[0], t[1], t[2], t[3]); }});
  };
  // x, z in V-; y, w in V+.
  auto pm = [](const GjspObject& g, std::size_t i) { return g.pair.parity(Sign::minus, i); };
  auto pp = [](const GjspObject& g, std::size_t i) { return g.pair.parity(Sign::plus, i); };
  auto invariance = [pm, pp](bool left) {
    return [pm, pp, left](const GjspObject& g, std::size_t x, std::size_t y, std::size_t z, std::size_t w) {
      const auto& P = g.pairing.matrix;
      const Scalar lhs = pair_left(P, g.pair.D(Sign::minus, x, y).column(z), w);
      const int sg = left ? eta(pm(g, x), pp(g, y), pm(g, z)) : eta(pm(g, x), pp(g, y), pp(g, w));
      const Scalar rhs = apply_sign(sg, pair_right(P, z, g.pair.D(Sign::plus, y, x).column(w)));
      return Identity::Sides{Vector{lhs}, Vector{rhs}};
    };
  };
  auto symmetry_sign = [pm, pp](bool left, const GjspObject& g, std::size_t x, std::size_t y, std::size_t z,
                                std::size_t w) {
    if (left) return eta(add(pm(g, x), pp(g, y)), add(pm(g, z), pp(g, w)));
    return eta(add(pm(g, x), pp(g, w)), add(pm(g, z), pp(g, y)));
  };
  auto symmetry1 = [symmetry_sign](bool left) {
    return [symmetry_sign, left](const GjspObject& g, std::size_t x, std::size_t y, std::size_t z, std::size_t w) {
      const auto& P = g.pairing.matrix;
      const Scalar lhs = pair_left(P, g.pair.D(Sign::minus, x, y).column(z), w);
      const Scalar rhs =
          apply_sign(symmetry_sign(left, g, x, y, z, w), pair_left(P, g.pair.D(Sign::minus, z, w).column(x), y));
      return Identity::Sides{Vector{lhs}, Vector{rhs}};
    };
  };
  auto symmetry2 = [symmetry_sign](bool left) {
    return [symmetry_sign, left](const GjspObject& g, std::size_t x, std::size_t y, std::size_t z, std::size_t w) {
      const auto& P = g.pairing.matrix;
      const Scalar lhs = pair_right(P, x, g.pair.D(Sign::plus, y, z).column(w));
      const Scalar rhs =
          apply_sign(symmetry_sign(left, g, x, y, z, w), pair_right(P, z, g.pair.D(Sign::plus, w, x).column(y)));
      return Identity::Sides{Vector{lhs}, Vector{rhs}};
    };
  };
  make("left_superinvariant", invariance(true));
  make("right_superinvariant", invariance(false));
  make("left_supersymmetric_1", symmetry1(true));
  make("left_supersymmetric_2", symmetry2(true));
  make("right_supersymmetric_1", symmetry1(false));
  make("right_supersymmetric_2", symmetry2(false));
  return ids;
}

Report check_pairing_properties(const GjspObject& o, const CheckOptions& options) {
  const auto& P = o.pairing;
  if (!(P.left == o.pair.space(Sign::minus)) || !(P.right == o.pair.space(Sign::plus))) {
    throw std::invalid_argument("pairing spaces do not match the pair");
  }
  Report r;
  auto po = std::make_shared<const GjspObject>(o);
  r.add(sweep({"homogeneous", {P.left.dim(), P.right.dim()},
               [po](std::span<const std::size_t> t) {
                 const auto& Q = po->pairing;
                 const bool mixed = Q.left.parity(t[0]) != Q.right.parity(t[1]);
                 return Identity::Sides{Vector{mixed ? Q.matrix(t[0], t[1]) : Scalar(0)}, Vector{Scalar(0)}};
               }},
              options));
  if (P.is_nondegenerate()) {
    r.add(single_result("nondegenerate", true));
  } else {
    std::vector<Witness> w;
    auto k = nullspace(P.matrix);
    if (!k.empty()) w.push_back(Witness{{}, k.front(), P.matrix * k.front()});
    r.add(single_result("nondegenerate", false, "pairing matrix is singular or not square", std::move(w)));
  }
  for (const auto& res : sweep_all(pairing_identities(o), options).properties) r.add(res);
  return r;
}

const std::vector<std::string>& good_pairing_properties() {
  static const std::vector<std::string> names{"homogeneous", "nondegenerate", "left_superinvariant",
                                              "left_supersymmetric_1", "left_supersymmetric_2"};
  return names;
}

Report check_object(const GjspObject& o, const CheckOptions& options) {
  Report r = check_fundamental_identity(o.pair, options);
  const Report p = check_pairing_properties(o, options);
  for (const auto& name : good_pairing_properties()) r.add(*p.find(name));
  return r;
}

Vector NuOperator::flat() const {
  Vector v = minus.flat();
  v.insert(v.end(), plus.flat().begin(), plus.flat().end());
  return v;
}

NuOperator nu(const Gjsp& v, std::size_t x, std::size_t y) {
  const Parity px = v.parity(Sign::minus, x);
  const Parity py = v.parity(Sign::plus, y);
  Matrix plus = v.D(Sign::plus, y, x);
  if (eta(px, py) > 0) plus = -plus;
  return NuOperator{v.D(Sign::minus, x, y), std::move(plus), add(px, py)};
}

NuOperator nu(const Gjsp& v, const Vector& x, const Vector& y) {
  NuOperator out{Matrix(v.dim(Sign::minus), v.dim(Sign::minus)), Matrix(v.dim(Sign::plus), v.dim(Sign::plus)),
                 std::nullopt};
  std::optional<Parity> parity;
  bool mixed = false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j].is_zero()) continue;
      const NuOperator g = nu(v, i, j);
      if (g.is_zero()) continue;
      const Scalar c = x[i] * y[j];
      out.minus += c * g.minus;
      out.plus += c * g.plus;
      if (parity && *parity != *g.parity) mixed = true;
      parity = g.parity;
    }
  }
  out.parity = mixed ? std::nullopt : std::optional<Parity>(parity.value_or(0));
  return out;
}

NuOperator bracket(const NuOperator& a, const NuOperator& b) {
  if (!a.parity || !b.parity) throw std::invalid_argument("bracket of inhomogeneous operators");
  return NuOperator{supercommutator(a.minus, *a.parity, b.minus, *b.parity),
                    supercommutator(a.plus, *a.parity, b.plus, *b.parity), add(*a.parity, *b.parity)};
}

InnerStructure instr(const Gjsp& v) {
  const std::size_t nm = v.dim(Sign::minus);
  const std::size_t np = v.dim(Sign::plus);
  const std::size_t flat_len = nm * nm + np * np;
  std::vector<NuOperator> gens;
  std::vector<Vector> flats;
  for (std::size_t i = 0; i < nm; ++i) {
    for (std::size_t j = 0; j < np; ++j) {
      gens.push_back(nu(v, i, j));
      flats.push_back(gens.back().flat());
    }
  }
  const auto pivots = independent_columns(from_columns(flats, flat_len));
  InnerStructure out{nullptr, {}, {}, {}, SuperModule(make_lie(v.field(), SuperSpace(), {}), SuperSpace(), {}),
                     SuperModule(make_lie(v.field(), SuperSpace(), {}), SuperSpace(), {})};
  std::vector<Vector> basis_flats;
  std::vector<Parity> parities;
  for (auto p : pivots) {
    out.basis.push_back(gens[p]);
    out.basis_generators.push_back({p / np, p % np});
    basis_flats.push_back(flats[p]);
    parities.push_back(*gens[p].parity);
  }
  const SpanSolver solver(basis_flats, flat_len);
  for (const auto& f : flats) out.generator_coordinates.push_back(*solver.coordinates(f));
  const std::size_t k = out.basis.size();
  std::vector<SparseTensor<3>::Entry> entries;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      const auto c = solver.coordinates(bracket(out.basis[a], out.basis[b]).flat());
      if (!c) {
        throw NotClosedError("commutator of inner operators " + std::to_string(a) + " and " + std::to_string(b) +
                             " leaves their span; the fundamental identity fails");
      }
      for (std::size_t j = 0; j < k; ++j) {
        if (!(*c)[j].is_zero()) entries.push_back({{a, b, j}, (*c)[j]});
      }
    }
  }
  out.algebra = make_lie(v.field(), SuperSpace(parities), SparseTensor<3>({k, k, k}, std::move(entries)));
  std::vector<Matrix> rm, rp;
  for (const auto& b : out.basis) {
    rm.push_back(b.minus);
    rp.push_back(b.plus);
  }
  out.minus_module = SuperModule::from_matrices(out.algebra, v.space(Sign::minus), rm);
  out.plus_module = SuperModule::from_matrices(out.algebra, v.space(Sign::plus), rp);
  return out;
}

std::vector<Identity> derivation_identities(const Gjsp& v, const PairOperator& d, Parity degree) {
  auto pv = std::make_shared<const Gjsp>(v);
  auto pd = std::make_shared<const PairOperator>(d);
  for (Sign s : {Sign::minus, Sign::plus}) {
    const Matrix& m = s == Sign::minus ? d.minus : d.plus;
    if (m.rows() != v.dim(s) || m.cols() != v.dim(s)) throw std::invalid_argument("derivation has the wrong shape");
  }
  std::vector<Identity> ids;
  for (Sign s : {Sign::minus, Sign::plus}) {
    ids.push_back({std::string("degree_") + sign_name(s), {v.dim(s)}, [pv, pd, s, degree](std::span<const std::size_t> t) {
                     const Matrix& m = s == Sign::minus ? pd->minus : pd->plus;
                     const Vector col = m.column(t[0]);
                     Vector off(col.size());
                     for (std::size_t k = 0; k < col.size(); ++k) {
                       if (pv->parity(s, k) != add(pv->parity(s, t[0]), degree)) off[k] = col[k];
                     }
                     return Identity::Sides{off, Vector(off.size())};
                   }});
  }
  for (Sign s : {Sign::minus, Sign::plus}) {
    const Sign o = opposite(s);
    ids.push_back({std::string("derivation_") + sign_name(s), {v.dim(s), v.dim(o), v.dim(s)},
                   [pv, pd, s, o, degree](std::span<const std::size_t> t) {
                     const auto& V = *pv;
                     const Matrix& ds = s == Sign::minus ? pd->minus : pd->plus;
                     const Matrix& dop = s == Sign::minus ? pd->plus : pd->minus;
                     const std::size_t x = t[0], y = t[1], z = t[2];
                     const Vector lhs = ds * V.D(s, x, y).column(z);
                     Vector rhs = V.D_right_basis(s, ds.column(x), y).column(z);
                     axpy(rhs, Scalar(eta(degree, V.parity(s, x))), V.D_left_basis(s, x, dop.column(y)).column(z));
                     axpy(rhs, Scalar(eta(degree, add(V.parity(s, x), V.parity(o, y)))), V.D(s, x, y) * ds.column(z));
                     return Identity::Sides{lhs, rhs};
                   }});
  }
  return ids;
}

Report check_derivation(const Gjsp& v, const PairOperator& d, Parity degree, const CheckOptions& options) {
  return sweep_all(derivation_identities(v, d, degree), options);
}

std::vector<Identity> jordan_identities(const Gjsp& v) {
  auto pv = std::make_shared<const Gjsp>(v);
  std::vector<Identity> ids;
  for (Sign s : {Sign::minus, Sign::plus}) {
    const Sign o = opposite(s);
    ids.push_back({std::string("jordan_") + sign_name(s), {v.dim(s), v.dim(o), v.dim(s)},
                   [pv, s, o](std::span<const std::size_t> t) {
                     const auto& V = *pv;
                     const Parity px = V.parity(s, t[0]), py = V.parity(o, t[1]), pz = V.parity(s, t[2]);
                     const int sg = eta(px, py) * eta(px, pz) * eta(py, pz);
                     return Identity::Sides{V.D(s, t[0], t[1]).column(t[2]),
                                            scaled(V.D(s, t[2], t[1]).column(t[0]), Scalar(sg))};
                   }});
  }
  return ids;
}

Flavor classify_flavor(const Gjsp& v, const CheckOptions& options) {
  Flavor f;
  f.jordan_superpair = sweep_all(jordan_identities(v), options).passed();
  f.pair = v.space(Sign::minus).odd_dim() == 0 && v.space(Sign::plus).odd_dim() == 0;
  f.antipair = v.space(Sign::minus).even_dim() == 0 && v.space(Sign::plus).even_dim() == 0;
  f.jordan_pair = f.jordan_superpair && f.pair;
  f.jordan_antipair = f.jordan_superpair && f.antipair;
  return f;
}

PairMap identity_map(const Gjsp& v) {
  return PairMap{Matrix::identity(v.dim(Sign::minus)), Matrix::identity(v.dim(Sign::plus))};
}

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

bool is_invertible(const RingMatrix& m) {
  std::shared_ptr<const QuadraticRing> ring;
  for (const auto& x : m.flat()) {
    if (x.ring()) {
      ring = x.ring();
      break;
    }
  }
  if (!ring) return is_invertible(split(m).first);
  return inverse(m, *ring, ring).has_value();
}

GjspObject transport(const GjspObject& o, const PairMap& phi) {
  const auto& V = o.pair;
  std::vector<Parity> par[2];
  Matrix inv[2];
  for (Sign s : {Sign::minus, Sign::plus}) {
    const Matrix& m = phi[s];
    const int k = s == Sign::minus ? 0 : 1;
    auto i = inverse(m);
    if (!i || m.rows() != V.dim(s)) throw std::invalid_argument("transport needs invertible maps");
    inv[k] = *i;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      auto p = vector_parity(m.column(c), V.space(s));
      if (!p) throw std::invalid_argument("transport map columns must be parity-homogeneous");
      par[k].push_back(*p);
    }
  }
  SparseTensor<4> prods[2];
  for (Sign s : {Sign::minus, Sign::plus}) {
    const Sign op = opposite(s);
    const int k = s == Sign::minus ? 0 : 1;
    const Matrix& A = phi[s];
    const Matrix& B = phi[op];
    const std::size_t ns = A.cols(), no = B.cols();
    std::vector<SparseTensor<4>::Entry> entries;
    for (std::size_t a = 0; a < ns; ++a) {
      for (std::size_t b = 0; b < no; ++b) {
        const Matrix d = inv[k] * V.D(s, A.column(a), B.column(b)) * A;
        for (std::size_t c = 0; c < ns; ++c) {
          for (std::size_t out = 0; out < ns; ++out) {
            if (!d(out, c).is_zero()) entries.push_back({{a, b, c, out}, d(out, c)});
          }
        }
      }
    }
    prods[k] = SparseTensor<4>({ns, no, ns, ns}, std::move(entries));
  }
  SuperSpace minus(par[0]), plus(par[1]);
  Gjsp pair(V.field(), minus, plus, prods[0], prods[1]);
  PairingForm pf(minus, plus, phi.minus.transpose() * o.pairing.matrix * phi.plus);
  return GjspObject{std::move(pair), std::move(pf)};
}

std::optional<Matrix> pairing_partner(const PairingForm& source, const PairingForm& target, const Matrix& phi_plus) {
  const auto ip = inverse(phi_plus);
  const auto it = inverse(target.matrix);
  if (!ip || !it) return std::nullopt;
  return (source.matrix * (*ip) * (*it)).transpose();
}

GjspObject scale_pairing(const GjspObject& o, const Scalar& c) {
  return GjspObject{o.pair, PairingForm(o.pairing.left, o.pairing.right, o.pairing.matrix * c)};
}

}  // namespace superpair
