// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"

using namespace superpair;

namespace {

/// Collects the reasons a criterion failed; an empty log means it passed.
class Log {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void require(const Report& r, const std::string& what) {
    if (r.passed()) return;
    std::string names;
    for (const auto& n : r.failures()) names += (names.empty() ? "" : ",") + n;
    failures_.push_back(what + " [" + names + "]");
  }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    std::string s;
    for (std::size_t i = 0; i < failures_.size() && i < 3; ++i) s += (i ? "; " : "") + failures_[i];
    if (failures_.size() > 3) s += "; +" + std::to_string(failures_.size() - 3) + " more";
    return s;
  }

 private:
  std::vector<std::string> failures_;
};

std::string label(const std::string& what, const std::vector<int>& params) {
  std::ostringstream os;
  os << what << "(";
  for (std::size_t i = 0; i < params.size(); ++i) os << (i ? "," : "") << params[i];
  os << ")";
  return os.str();
}

bool same_object(const GjspObject& a, const GjspObject& b) {
  for (Sign s : {Sign::minus, Sign::plus}) {
    if (a.pair.dim(s) != b.pair.dim(s)) return false;
  }
  for (Sign s : {Sign::minus, Sign::plus}) {
    const Sign o = s == Sign::minus ? Sign::plus : Sign::minus;
    for (std::size_t x = 0; x < a.pair.dim(s); ++x) {
      for (std::size_t y = 0; y < a.pair.dim(o); ++y) {
        if (!(a.pair.D(s, x, y) == b.pair.D(s, x, y))) return false;
      }
    }
  }
  return a.pairing.matrix == b.pairing.matrix;
}

const std::vector<std::pair<int, int>> kGlShapes{{1, 0}, {2, 0}, {1, 1}, {2, 1}};

std::vector<std::pair<std::string, GjspObject>> catalog_objects() {
  return {{"I(1,1)", jordan_pair_type_I(1, 1)}, {"I(2,2)", jordan_pair_type_I(2, 2)},
          {"I(2,3)", jordan_pair_type_I(2, 3)}, {"IV(2)", jordan_pair_type_IV(2)},
          {"IV(3)", jordan_pair_type_IV(3)},    {"M(1)", kantor_pair_Mn(1)},
          {"M(2)", kantor_pair_Mn(2)},          {"gl(1|1) pair", fixtures::gl11_pair()}};
}

std::vector<ShiftParameter> shift_grid() {
  std::vector<ShiftParameter> g;
  for (const Scalar& l : {Scalar(-2), Scalar(-1), Scalar(1, 2), Scalar(1), Scalar(3)}) {
    for (Parity p : {0, 1}) g.push_back({l, p});
  }
  return g;
}

RingMatrix ring_diag(const std::vector<RingElement>& d) {
  RingMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

PairMap diagonal_aut(const std::vector<Scalar>& d) {
  std::vector<Scalar> inv;
  for (const auto& x : d) inv.push_back(x.inverse());
  return PairMap{fixtures::diag(d), fixtures::diag(inv)};
}

// 1. The first worked isomorphism over a parameter grid.
void iso_type_I(Log& log) {
  for (int p = 1; p <= 3; ++p) {
    for (int q = 1; q <= 3; ++q) log.require(paper_iso_type_I(p, q).report, label("iso_type_I", {p, q}));
  }
}

// 2. The second worked isomorphism for n = 1, 2, 3.
void iso_Mn(Log& log) {
  for (int n = 1; n <= 3; ++n) log.require(paper_iso_Mn(n).report, label("iso_Mn", {n}));
}

// 3. The forward construction lands in pair objects and factors through the faithful quotient.
void forward_soundness(Log& log) {
  for (auto [m, n] : kGlShapes) {
    const MetricModuleTriple t = gl_supertrace(m, n);
    const GjspObject o = faulkner_forward(t);
    log.require(check_object(o), label("forward gl", {m, n}));
    // {f, v, g}- against the dense gl bracket on the dual module.
    const std::size_t d = static_cast<std::size_t>(m + n);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const Vector br = bracket_of(t, unit_vector(d, i), unit_vector(d, j));
        Vector expect(d * d);
        expect[j * d + i] = Scalar(-oracle::eta({oracle::gl_parity(m, i), oracle::gl_parity(m, j)}));
        log.require(br == expect, label("bracket closed form", {m, n, static_cast<int>(i), static_cast<int>(j)}));
      }
    }
  }
  const MetricModuleTriple nf = nonfaithful_fixture();
  const MetricModuleTriple quotient = faithful_quotient(nf);
  log.require(is_faithful(quotient.module), "quotient faithful");
  log.require(quotient.algebra->dim() + 1 == nf.algebra->dim(), "quotient drops the kernel");
  log.require(same_object(faulkner_forward(nf), faulkner_forward(quotient)), "forward through quotient");
  for (const auto& [name, o] : catalog_objects()) {
    log.require(check_triple(faulkner_backward(o).triple), "backward image " + name);
  }
}

// 4. The backward construction with its well-definedness audit.
void backward_audit(Log& log) {
  std::vector<std::pair<std::string, GjspObject>> objects = catalog_objects();
  objects.emplace_back("M(3)", kantor_pair_Mn(3));
  for (const auto& a : shift_grid()) objects.emplace_back("V_alpha " + a.lambda.to_string(), onedim_object(a));
  objects.emplace_back("I(1,2)xIV(2)", gjsp_tensor(jordan_pair_type_I(1, 2), jordan_pair_type_IV(2)));
  objects.emplace_back("I(1,2)xI(1,3)", gjsp_tensor(jordan_pair_type_I(1, 2), jordan_pair_type_I(1, 3)));
  for (const auto& [name, o] : objects) {
    const BackwardResult b = faulkner_backward(o);
    log.require(b.audit, "audit " + name);
    log.require(well_definedness_audit(o, b.inner), "re-audit " + name);
    log.require(check_triple(b.triple), "triple " + name);
    log.require(b.triple.form.rows() == instr(o.pair).basis.size(), "dim " + name);
  }
}

// 5. Both round trips return isomorphic structures.
void round_trips(Log& log) {
  for (auto [m, n] : kGlShapes) log.require(roundtrip_check(gl_supertrace(m, n)).report, label("roundtrip gl", {m, n}));
  for (const auto& [name, o] : catalog_objects()) log.require(roundtrip_check(o).report, "roundtrip " + name);
  log.require(roundtrip_check(onedim_object({Scalar(-3, 2), 1})).report, "roundtrip V_alpha");
}

// 6. The representation kernel is the orthogonal complement of instr_LM.
void kernel_complement(Log& log) {
  const MetricModuleTriple t = nonfaithful_fixture();
  const InstrLM in = instr_LM(t);
  log.require(in.report, "instr_LM report");
  const auto perp = orthogonal_complement(t.form, in.basis, &t.algebra->space());
  const auto kernel = representation_kernel(t.module);
  const std::size_t d = t.algebra->dim();
  log.require(same_subspace(perp, kernel, d), "kernel = perp");
  log.require(same_subspace(kernel, {unit_vector(d, d - 1)}, d), "kernel = span{z}");
  log.require(same_subspace(in.kernel, kernel, d), "reported kernel");
  log.require(same_subspace(fixtures::ideal_closure(t.algebra, in.basis), in.basis, d), "instr_LM is an ideal");
  for (auto [m, n] : kGlShapes) {
    const MetricModuleTriple g = gl_supertrace(m, n);
    const InstrLM gi = instr_LM(g);
    log.require(gi.report, label("instr_LM gl", {m, n}));
    log.require(gi.kernel.empty() && gi.basis.size() == g.algebra->dim(), label("full gl", {m, n}));
  }
}

// 7. dim instr(I_{p,q}) = p^2 + q^2 - 1.
void instr_dimensions(Log& log) {
  for (int p = 1; p <= 3; ++p) {
    for (int q = 1; q <= 3; ++q) {
      const std::size_t got = instr(jordan_pair_type_I(p, q).pair).basis.size();
      log.require(got == static_cast<std::size_t>(p * p + q * q - 1), label("dim instr I", {p, q}));
    }
  }
}

// 8. V_alpha (x) V_beta = V_{alpha+beta} and (O^[alpha])^[beta] = O^[alpha+beta].
void shift_algebra(Log& log) {
  const auto grid = shift_grid();
  int points = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      const ShiftParameter& a = grid[i];
      const ShiftParameter& b = grid[(i + 2 * j + 1) % grid.size()];
      ++points;
      log.require(verify_onedim_addition(a, b), "onedim " + a.lambda.to_string() + "+" + b.lambda.to_string());
    }
  }
  log.require(points == 50, "50 grid points");
  const GjspObject I12 = jordan_pair_type_I(1, 2);
  const std::vector<ShiftParameter> small{{Scalar(-1), 0}, {Scalar(1, 2), 1}, {Scalar(2), 0}};
  for (const auto& a : small) {
    for (const auto& b : small) {
      log.require(verify_shift_composition(I12, a, b), "composition " + a.lambda.to_string() + "," + b.lambda.to_string());
    }
  }
}

// 9. Tensor product formulas and products of automorphisms.
void tensor_formulas(Log& log) {
  const GjspObject I12 = jordan_pair_type_I(1, 2), IV2 = jordan_pair_type_IV(2);
  const GjspObject g = fixtures::gl11_pair();
  log.require(verify_tensor_formulas(I12, IV2), "I(1,2) x IV(2)");
  log.require(verify_tensor_formulas(g, jordan_pair_type_I(1, 1)), "gl pair x I(1,1)");
  log.require(verify_tensor_formulas(g, g), "gl pair x gl pair");
  log.require(check_object(gjsp_tensor(g, g)), "gl pair x gl pair object");
  log.require(verify_aut_tensor(diagonal_aut({2, 3}), diagonal_aut({Scalar(1, 2), 5}), I12, jordan_pair_type_I(1, 2)),
              "diagonal automorphisms");
  const Scalar l(7, 2);
  const PairMap c{l * Matrix::identity(2), l.inverse() * Matrix::identity(2)};
  const PairMap c_inv{l.inverse() * Matrix::identity(2), l * Matrix::identity(2)};
  log.require(verify_aut_tensor(c, c_inv, I12, IV2), "scalar automorphisms");
}

// 10. Odd parts are exercised: the gl(1|1) pair has odd structure constants, and dualization signs hold.
void odd_components(Log& log) {
  const GjspObject g = fixtures::gl11_pair();
  bool odd = false;
  for (Sign s : {Sign::minus, Sign::plus}) {
    for (const auto& [idx, value] : g.pair.product(s).entries()) {
      if (!value.is_zero() && g.pair.parity(s, idx[0]) == 1) odd = true;
    }
  }
  log.require(odd, "nonzero odd products");
  log.require(check_fundamental_identity(g.pair), "fundamental identity");
  const Report pr = check_pairing_properties(g);
  for (const auto& name : good_pairing_properties()) log.require(pr.passed(name), "pairing " + name);

  std::mt19937_64 rng(20261019);
  std::uniform_int_distribution<int> dim(0, 3);
  int cases = 0, nontrivial = 0;
  while (cases < 200) {
    const int m = dim(rng), n = dim(rng);
    if (m + n == 0) continue;
    ++cases;
    const SuperSpace s = SuperSpace::standard(m, n);
    const SuperMap phi(s, s, oracle::random_matrix(rng, s.dim(), s.dim()));
    const SuperMap l = left_dual_map(phi);
    log.require(right_dual_map(l).matrix == phi.matrix, "right o left = id");
    log.require(left_dual_map(left_dual_map(left_dual_map(l))).matrix == phi.matrix, "left^4 = id");
    // Entry formula of the left dual map: d(k, j) = eta(p_j + p_k, p_j) r(j, k).
    for (std::size_t j = 0; j < s.dim(); ++j) {
      for (std::size_t k = 0; k < s.dim(); ++k) {
        const Scalar r = phi.matrix(j, k);
        if (r.is_zero()) continue;
        const int pphi = (s.parity(j) + s.parity(k)) % 2;
        const int sign = oracle::eta({pphi, static_cast<int>(s.parity(j))});
        log.require(l.matrix(k, j) == Scalar(sign) * r, "left dual entry");
      }
    }
    if (!(left_dual_map(l).matrix == phi.matrix)) ++nontrivial;
  }
  log.require(nontrivial > 0, "left^2 differs from id somewhere");
}

// 11. Transfer of automorphisms is involutive and detects non-automorphisms over a ring.
void transfers(Log& log) {
  const MetricModuleTriple t = gl_supertrace(1, 1);
  const TripleMap<Scalar> id{Matrix::identity(4), Matrix::identity(2)};
  const auto r = transfer_aut(id, t);
  log.require(r.report, "identity triple transfer");
  const GjspObject o = jordan_pair_type_I(1, 2);
  const auto d = transfer_aut(diagonal_aut({2, Scalar(-1, 3)}), o);
  log.require(d.report, "diagonal pair transfer");
  log.require(d.report.find("involution") != nullptr, "involution recorded");
  if (d.triple_map) {
    const auto back = transfer_aut(*d.triple_map, faulkner_backward(o).triple);
    log.require(back.report, "transfer back");
    log.require(back.pair_map && back.pair_map->minus == fixtures::diag({2, Scalar(-1, 3)}), "transfer back equals start");
  }
  const auto eps = QuadraticRing::dual_numbers();
  const NuOperator n = nu(o.pair, 0, 1);
  BasicPairMap<RingElement> phi{to_ring(Matrix::identity(2)), to_ring(Matrix::identity(2))};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      phi.minus(i, j) = RingElement(i == j ? Scalar(1) : Scalar(0), n.minus(i, j), eps);
      phi.plus(i, j) = RingElement(i == j ? Scalar(1) : Scalar(0), n.plus(i, j), eps);
    }
  }
  log.require(transfer_aut(phi, o).report, "id + eps nu accepted");
  const RingElement one_eps(Scalar(1), Scalar(1), eps);
  const BasicPairMap<RingElement> perturbed{ring_diag({one_eps, one_eps}), ring_diag({one_eps, one_eps})};
  log.require(!transfer_aut(perturbed, o).passed(), "id + eps (I, I) rejected");
}

// 12. Negative controls fail with reproducible, jobs-independent witnesses.
void negative_controls(Log& log) {
  const GjspObject I = jordan_pair_type_I(1, 2);
  const Gjsp bad = fixtures::bump_product(I.pair, Sign::minus, {0, 0, 0, 1}, Scalar(1));
  const Report r1 = check_fundamental_identity(bad);
  const Report r3 = check_fundamental_identity(bad, {3, false});
  log.require(!r1.passed("fundamental_identity_minus"), "FI mutation caught");
  log.require(fixtures::witnesses_reproduce(fundamental_identities(bad), r1, "fundamental_identity_minus"),
              "FI witness reproduces");
  log.require(r1.find("fundamental_identity_minus")->witnesses.front().index ==
                  r3.find("fundamental_identity_minus")->witnesses.front().index,
              "FI witness independent of jobs");

  const MetricModuleTriple t = gl_supertrace(1, 1);
  const LieHandle broken =
      fixtures::bump_bracket(fixtures::bump_bracket(t.algebra, {0, 1, 1}, Scalar(1)), {1, 0, 1}, Scalar(-1));
  const Report jr = check_lie_axioms(broken);
  log.require(jr.failures() == std::vector<std::string>{"jacobi"}, "only Jacobi fails");
  log.require(fixtures::witnesses_reproduce(lie_identities(broken), jr, "jacobi"), "Jacobi witness reproduces");

  std::vector<Matrix> rho = t.module.rho_all();
  rho[1](0, 1) = -1;
  const SuperModule bm = SuperModule::from_matrices(t.algebra, t.module.space(), rho);
  const Report mr = check_module(bm);
  log.require(mr.failures() == std::vector<std::string>{"representation"}, "only representation fails");
  log.require(fixtures::witnesses_reproduce(module_identities(bm), mr, "representation"), "module witness reproduces");

  Matrix trace_form(4, 4);
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      trace_form(a, b) = Scalar::rational(
          oracle::trace(oracle::mul(oracle::unit(2, 2, a / 2, a % 2), oracle::unit(2, 2, b / 2, b % 2))));
    }
  }
  const Report fr = check_form_b(t.algebra, trace_form);
  log.require(!fr.passed("supersymmetric"), "trace form not supersymmetric");
  log.require(!fr.passed("supersymmetric") &&
                  fr.find("supersymmetric")->witnesses.front().index == std::vector<std::size_t>{1, 2},
              "first witness at (1,2)");
  log.require(fixtures::witnesses_reproduce(form_identities(t.algebra, trace_form), fr, "supersymmetric"),
              "form witness reproduces");
  log.require(check_form_b(t.algebra, t.form).passed(), "supertrace form passes");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Log&)>>> criteria{
      {"first worked isomorphism over p, q <= 3", iso_type_I},
      {"second worked isomorphism for n = 1, 2, 3", iso_Mn},
      {"forward construction soundness", forward_soundness},
      {"backward construction and well-definedness audit", backward_audit},
      {"round trips in both directions", round_trips},
      {"representation kernel equals the complement of instr_LM", kernel_complement},
      {"instr dimensions of type I", instr_dimensions},
      {"one-dimensional objects and shift composition", shift_algebra},
      {"tensor formulas and tensor automorphisms", tensor_formulas},
      {"odd components and dualization signs", odd_components},
      {"automorphism transfer", transfers},
      {"negative controls", negative_controls},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Log log;
    try {
      criteria[i].second(log);
    } catch (const std::exception& e) {
      log.require(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << i + 1 << ": " << (log.ok() ? "PASS" : "FAIL") << " " << criteria[i].first;
    if (!log.ok()) {
      std::cout << " (" << log.summary() << ")";
      ++failed;
    }
    std::cout << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
