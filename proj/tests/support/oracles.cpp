#include "oracles.hpp"

#include <algorithm>

namespace oracle {

Dense zeros(std::size_t r, std::size_t c) { return Dense(r, std::vector<mpq_class>(c, 0)); }

Dense mul(const Dense& a, const Dense& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Dense out = zeros(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < k; ++t) {
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  }
  return out;
}

Dense transpose(const Dense& a) {
  const std::size_t r = a.size(), c = a.empty() ? 0 : a[0].size();
  Dense out = zeros(c, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) out[j][i] = a[i][j];
  }
  return out;
}

Dense add(const Dense& a, const Dense& b) {
  Dense out = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] += b[i][j];
  }
  return out;
}

Dense scale(const Dense& a, const mpq_class& s) {
  Dense out = a;
  for (auto& row : out) {
    for (auto& x : row) x *= s;
  }
  return out;
}

mpq_class trace(const Dense& a) {
  mpq_class t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

std::size_t rank(Dense m) {
  std::size_t r = 0;
  const std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

Dense unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
  Dense out = zeros(rows, cols);
  out[i][j] = 1;
  return out;
}

Dense to_dense(const superpair::Vector& v, std::size_t rows, std::size_t cols) {
  Dense out = zeros(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out[i][j] = v[i * cols + j].value();
  }
  return out;
}

superpair::Vector from_dense(const Dense& m) {
  superpair::Vector out;
  for (const auto& row : m) {
    for (const auto& x : row) out.push_back(superpair::Scalar::rational(x));
  }
  return out;
}

int eta(const std::vector<int>& p) {
  int exponent = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) exponent += p[i] * p[j];
  }
  return exponent % 2 == 0 ? 1 : -1;
}

int gl_parity(int m, std::size_t k) { return static_cast<int>(k) < m ? 0 : 1; }

Dense gl_bracket(int m, int n, std::size_t a, std::size_t b) {
  const std::size_t N = static_cast<std::size_t>(m + n);
  const Dense x = unit(N, N, a / N, a % N), y = unit(N, N, b / N, b % N);
  const int px = (gl_parity(m, a / N) + gl_parity(m, a % N)) % 2;
  const int py = (gl_parity(m, b / N) + gl_parity(m, b % N)) % 2;
  return add(mul(x, y), scale(mul(y, x), -eta({px, py})));
}

mpq_class gl_supertrace_form(int m, int n, std::size_t a, std::size_t b) {
  const std::size_t N = static_cast<std::size_t>(m + n);
  const Dense xy = mul(unit(N, N, a / N, a % N), unit(N, N, b / N, b % N));
  mpq_class s = 0;
  for (std::size_t i = 0; i < N; ++i) s += gl_parity(m, i) ? -xy[i][i] : xy[i][i];
  return s;
}

Dense type_I_triple(const Dense& x, const Dense& y, const Dense& z) {
  return add(mul(mul(x, transpose(y)), z), mul(mul(z, transpose(y)), x));
}

Dense kantor_triple(const Dense& x, const Dense& y, const Dense& z) {
  return add(type_I_triple(x, y, z), scale(mul(mul(z, transpose(x)), y), -1));
}

superpair::Vector type_IV_triple(const superpair::Vector& x, const superpair::Vector& y,
                                 const superpair::Vector& z) {
  auto q = [](const superpair::Vector& a, const superpair::Vector& b) {
    superpair::Scalar s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  };
  superpair::Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = q(x, y) * z[i] + q(z, y) * x[i] - q(x, z) * y[i];
  return out;
}

superpair::Scalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-3, 3), den(1, 3);
  return superpair::Scalar(num(rng), den(rng));
}

superpair::Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density) {
  std::bernoulli_distribution keep(density);
  superpair::Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (keep(rng)) m(i, j) = random_scalar(rng);
    }
  }
  return m;
}

}  // namespace oracle

namespace fixtures {

Matrix diag(const std::vector<Scalar>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

GjspObject gl11_pair() { return faulkner_forward(gl_supertrace(1, 1)); }

Gjsp bump_product(const Gjsp& v, Sign s, SparseTensor<4>::Index idx, const Scalar& delta) {
  auto entries = v.product(s).entries();
  entries.push_back({idx, delta});
  const SparseTensor<4> t(v.product(s).extents(), entries);
  return s == Sign::minus ? Gjsp(v.field(), v.space(Sign::minus), v.space(Sign::plus), t, v.product(Sign::plus))
                          : Gjsp(v.field(), v.space(Sign::minus), v.space(Sign::plus), v.product(Sign::minus), t);
}

LieHandle bump_bracket(const LieHandle& l, SparseTensor<3>::Index idx, const Scalar& delta) {
  auto entries = l->bracket_tensor().entries();
  entries.push_back({idx, delta});
  return make_lie(l->field(), l->space(), SparseTensor<3>(l->bracket_tensor().extents(), entries));
}

std::vector<Vector> ideal_closure(const LieHandle& l, const std::vector<Vector>& seeds) {
  const std::size_t d = l->dim();
  std::vector<Vector> basis;
  auto add = [&](const Vector& x) {
    auto candidate = basis;
    candidate.push_back(x);
    if (rank_of(candidate, d) > basis.size()) {
      basis.push_back(x);
      return true;
    }
    return false;
  };
  for (const auto& s : seeds) add(s);
  for (bool grew = true; grew;) {
    grew = false;
    const auto current = basis;
    for (std::size_t x = 0; x < d; ++x) {
      for (const auto& y : current) grew = add(l->ad(x) * y) || grew;
    }
  }
  return basis;
}

FactorSplit natural_split_I12_I13(const GjspObject& tensor) {
  const BackwardResult back = faulkner_backward(tensor);
  // nu(e_i (x) e_0, e_k (x) e_0) for i != k generate the sl_2 part of the first factor.
  std::vector<Vector> seeds;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t k = 0; k < 2; ++k) {
      if (i != k) seeds.push_back(back.inner.generator(i * 3, k * 3));
    }
  }
  const auto& L = back.triple.algebra;
  FactorSplit split;
  split.l1 = ideal_closure(L, seeds);
  split.l2 = orthogonal_complement(back.triple.form, split.l1, &L->space());
  split.w = {unit_vector(6, 0), unit_vector(6, 3)};
  return split;
}

bool witnesses_reproduce(const std::vector<Identity>& identities, const Report& report, const std::string& name) {
  const PropertyResult* p = report.find(name);
  if (p == nullptr || p->witnesses.empty()) return false;
  for (const auto& id : identities) {
    if (id.name != name) continue;
    return std::all_of(p->witnesses.begin(), p->witnesses.end(),
                       [&](const Witness& w) { return reproduces(id, w) && w.lhs != w.rhs; });
  }
  return false;
}

}  // namespace fixtures
