#include "superpair/catalog/catalog.hpp"

#include <charconv>

namespace superpair {

namespace {

void require_positive(int v, const char* what) {
  if (v < 1) throw std::invalid_argument(std::string(what) + " must be at least 1");
}

using Entries = std::vector<SparseTensor<4>::Entry>;

GjspObject symmetric_object(const Field& field, const SuperSpace& s, const Entries& entries, const Matrix& pairing) {
  const std::size_t n = s.dim();
  const SparseTensor<4> t({n, n, n, n}, entries);
  return GjspObject{Gjsp(field, s, s, t, t), PairingForm(s, s, pairing)};
}

int parse_int(const std::string& s) {
  int v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) throw std::invalid_argument("not an integer: " + s);
  return v;
}

}  // namespace

GjspObject jordan_pair_type_I(int p, int q, const Field& field) {
  require_positive(p, "p");
  require_positive(q, "q");
  const std::size_t P = p, Q = q;
  auto e = [Q](std::size_t i, std::size_t j) { return i * Q + j; };
  Entries entries;
  for (std::size_t i = 0; i < P; ++i) {
    for (std::size_t j = 0; j < Q; ++j) {
      for (std::size_t k = 0; k < P; ++k) {
        for (std::size_t n = 0; n < Q; ++n) {
          // delta_jl delta_km E_in, with l = j and m = k.
          entries.push_back({{e(i, j), e(k, j), e(k, n), e(i, n)}, Scalar(1)});
        }
      }
      for (std::size_t l = 0; l < Q; ++l) {
        for (std::size_t m = 0; m < P; ++m) {
          // delta_nl delta_ki E_mj, with k = i and n = l.
          entries.push_back({{e(i, j), e(i, l), e(m, l), e(m, j)}, Scalar(1)});
        }
      }
    }
  }
  return symmetric_object(field, SuperSpace::standard(P * Q, 0), entries, Matrix::identity(P * Q));
}

GjspObject jordan_pair_type_IV(int n, const std::optional<Matrix>& q, const Field& field) {
  require_positive(n, "n");
  const std::size_t N = n;
  const Matrix form = q ? *q : Matrix::identity(N);
  if (form.rows() != N || form.cols() != N) throw std::invalid_argument("q has the wrong shape");
  if (!(form == form.transpose())) throw std::invalid_argument("q must be symmetric");
  if (rank(form) != N) throw std::invalid_argument("q must be nondegenerate");
  Entries entries;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      for (std::size_t k = 0; k < N; ++k) {
        if (!form(i, j).is_zero()) entries.push_back({{i, j, k, k}, form(i, j)});
        if (!form(k, j).is_zero()) entries.push_back({{i, j, k, i}, form(k, j)});
        if (!form(i, k).is_zero()) entries.push_back({{i, j, k, j}, -form(i, k)});
      }
    }
  }
  Matrix normalized = form;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) normalized(i, j) = field.normalize(form(i, j));
  }
  for (auto& [idx, v] : entries) v = field.normalize(v);
  return symmetric_object(field, SuperSpace::standard(N, 0), entries, normalized);
}

GjspObject kantor_pair_Mn(int n, const Field& field) {
  require_positive(n, "n");
  const GjspObject base = jordan_pair_type_I(n, n, field);
  const std::size_t N = n;
  auto e = [N](std::size_t i, std::size_t j) { return i * N + j; };
  Entries entries(base.pair.product(Sign::minus).entries().begin(), base.pair.product(Sign::minus).entries().end());
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      for (std::size_t l = 0; l < N; ++l) {
        for (std::size_t m = 0; m < N; ++m) {
          // -delta_nj delta_ik E_ml, with k = i and n = j.
          entries.push_back({{e(i, j), e(i, l), e(m, j), e(m, l)}, field.normalize(Scalar(-1))});
        }
      }
    }
  }
  return symmetric_object(field, base.pair.space(Sign::plus), entries, base.pairing.matrix);
}

MetricModuleTriple gl_supertrace(int m, int n, const Field& field) {
  if (m < 0 || n < 0 || m + n < 1) throw std::invalid_argument("gl(m|n) needs m, n >= 0 and m + n >= 1");
  const std::size_t N = m + n;
  auto par = [m](std::size_t i) -> Parity { return i >= static_cast<std::size_t>(m) ? 1 : 0; };
  auto e = [N](std::size_t i, std::size_t j) { return i * N + j; };
  std::vector<Parity> parities;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) parities.push_back(add(par(i), par(j)));
  }
  const SuperSpace space(parities);
  const Scalar one = field.normalize(Scalar(1)), minus_one = field.normalize(Scalar(-1));
  std::vector<SparseTensor<3>::Entry> bracket;
  Matrix form(N * N, N * N);
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      for (std::size_t k = 0; k < N; ++k) {
        for (std::size_t l = 0; l < N; ++l) {
          // [E_ij, E_kl] = delta_jk E_il - eta delta_li E_kj.
          if (j == k) bracket.push_back({{e(i, j), e(k, l), e(i, l)}, one});
          if (l == i) {
            const int sg = eta(add(par(i), par(j)), add(par(k), par(l)));
            bracket.push_back({{e(i, j), e(k, l), e(k, j)}, sg < 0 ? one : minus_one});
          }
        }
      }
      form(e(i, j), e(j, i)) = par(i) ? minus_one : one;
    }
  }
  const LieHandle l = make_lie(field, space, SparseTensor<3>({N * N, N * N, N * N}, std::move(bracket)));
  std::vector<Parity> mp;
  for (std::size_t i = 0; i < N; ++i) mp.push_back(par(i));
  std::vector<SparseTensor<3>::Entry> action;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) action.push_back({{e(i, j), j, i}, one});
  }
  SuperModule mod(l, SuperSpace(mp), SparseTensor<3>({N * N, N, N}, std::move(action)));
  return MetricModuleTriple{l, std::move(mod), std::move(form)};
}

MetricModuleTriple nonfaithful_fixture(const Field& field) {
  const MetricModuleTriple g = gl_supertrace(1, 1, field);
  const LieHandle z = make_lie(field, SuperSpace::standard(1, 0), {});
  const LieHandle sum = direct_sum_algebras(g.algebra, z);
  SuperModule m = inflate(g.module, sum, 0);
  return MetricModuleTriple{sum, std::move(m), block_diagonal(g.form, Matrix::identity(1))};
}

IsoWitness paper_iso_type_I(int p, int q, const CheckOptions& options) {
  const ShiftParameter shift{Scalar(-2), 0};
  GjspObject target = jordan_pair_type_I(p, q);
  GjspObject source = tensor_shift(gjsp_tensor(jordan_pair_type_I(1, p), jordan_pair_type_I(1, q)), shift);
  PairMap map = identity_map(target.pair);
  Report r = check_pair_hom(map, source.pair, target.pair, &source.pairing, &target.pairing, options);
  return IsoWitness{std::move(source), std::move(target), std::move(map), std::move(r)};
}

IsoWitness paper_iso_Mn(int n, const CheckOptions& options) {
  const ShiftParameter shift{Scalar(-2), 0};
  GjspObject target = kantor_pair_Mn(n);
  GjspObject source = tensor_shift(gjsp_tensor(jordan_pair_type_I(1, n), jordan_pair_type_IV(n)), shift);
  PairMap map = identity_map(target.pair);
  Report r = check_pair_hom(map, source.pair, target.pair, &source.pairing, &target.pairing, options);
  if (n == 1) {
    const ShiftParameter a = onedim_parameter(source), b = onedim_parameter(target);
    r.add(single_result("parameters", a == b, a.to_string() + " vs " + b.to_string()));
  }
  return IsoWitness{std::move(source), std::move(target), std::move(map), std::move(r)};
}

const std::vector<std::pair<std::string, std::string>>& catalog_names() {
  static const std::vector<std::pair<std::string, std::string>> names{
      {"type_I", "P Q"},      {"type_IV", "N"},           {"kantor_Mn", "N"}, {"gl_supertrace", "M N"},
      {"nonfaithful", ""},    {"onedim", "LAMBDA PARITY"}, {"gl_pair", "M N"},
  };
  return names;
}

CatalogEntry build_catalog_entry(const std::string& name, const std::vector<std::string>& parameters,
                                 const Field& field) {
  auto need = [&](std::size_t k) {
    if (parameters.size() != k) {
      throw std::invalid_argument(name + " takes " + std::to_string(k) + " parameter(s), got " +
                                  std::to_string(parameters.size()));
    }
  };
  if (name == "type_I") {
    need(2);
    return {name, parameters, jordan_pair_type_I(parse_int(parameters[0]), parse_int(parameters[1]), field),
            "simple Jordan pair of type I with the generic trace"};
  }
  if (name == "type_IV") {
    need(1);
    return {name, parameters, jordan_pair_type_IV(parse_int(parameters[0]), std::nullopt, field),
            "simple Jordan pair of type IV with the standard scalar product"};
  }
  if (name == "kantor_Mn") {
    need(1);
    return {name, parameters, kantor_pair_Mn(parse_int(parameters[0]), field),
            "Kantor pair of the structurable algebra of n x n matrices with transposition"};
  }
  if (name == "gl_supertrace") {
    need(2);
    return {name, parameters, gl_supertrace(parse_int(parameters[0]), parse_int(parameters[1]), field),
            "gl(m|n), natural module, supertrace form"};
  }
  if (name == "gl_pair") {
    need(2);
    return {name, parameters,
            faulkner_forward(gl_supertrace(parse_int(parameters[0]), parse_int(parameters[1]), field)),
            "forward image of gl(m|n) with the natural module and the supertrace form"};
  }
  if (name == "nonfaithful") {
    need(0);
    return {name, parameters, nonfaithful_fixture(field), "gl(1|1) plus an even central element acting by zero"};
  }
  if (name == "onedim") {
    need(2);
    const int a = parse_int(parameters[1]);
    if (a != 0 && a != 1) throw std::invalid_argument("parity must be 0 or 1");
    return {name, parameters, onedim_object(ShiftParameter{field.parse_scalar(parameters[0]), static_cast<Parity>(a)}, field),
            "one-dimensional object V_alpha"};
  }
  throw std::invalid_argument("unknown catalog entry: " + name);
}

}  // namespace superpair
