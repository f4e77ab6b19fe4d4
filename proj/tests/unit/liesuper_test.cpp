#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace superpair;

namespace {

LieHandle abelian(std::size_t even, std::size_t odd = 0) {
  return make_lie(Field::rationals(), SuperSpace::standard(even, odd), {});
}

SuperModule trivial_module(const LieHandle& l, const SuperSpace& space) {
  return SuperModule(l, space, {});
}

void expect_only_failure(const Report& r, const std::string& name) {
  EXPECT_EQ(r.failures(), std::vector<std::string>{name});
}

}  // namespace

TEST(GlSupertrace, StructureMatchesDenseOracle) {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 0}, {2, 0}, {1, 1}, {2, 1}, {1, 2}}) {
    const MetricModuleTriple t = gl_supertrace(m, n);
    const std::size_t N = static_cast<std::size_t>(m + n);
    ASSERT_EQ(t.algebra->dim(), N * N);
    for (std::size_t a = 0; a < N * N; ++a) {
      const int pa = (oracle::gl_parity(m, a / N) + oracle::gl_parity(m, a % N)) % 2;
      EXPECT_EQ(t.algebra->space().parity(a), pa);
      const oracle::Dense rho = oracle::unit(N, N, a / N, a % N);
      for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) EXPECT_EQ(t.module.rho(a)(i, j).value(), rho[i][j]);
      }
      for (std::size_t b = 0; b < N * N; ++b) {
        EXPECT_EQ(t.algebra->bracket(a, b), oracle::from_dense(oracle::gl_bracket(m, n, a, b)));
        EXPECT_EQ(t.form(a, b).value(), oracle::gl_supertrace_form(m, n, a, b));
      }
    }
    EXPECT_TRUE(check_triple(t).passed()) << m << "|" << n;
  }
}

TEST(LieAxioms, JacobiMutationIsCaught) {
  const LieHandle gl = gl_supertrace(1, 1).algebra;
  // [E00, E01] becomes 2 E01; anticommutativity and parity stay intact.
  const LieHandle bad = fixtures::bump_bracket(fixtures::bump_bracket(gl, {0, 1, 1}, 1), {1, 0, 1}, -1);
  const Report r = check_lie_axioms(bad);
  expect_only_failure(r, "jacobi");
  EXPECT_TRUE(fixtures::witnesses_reproduce(lie_identities(bad), r, "jacobi"));
  const Report all = check_lie_axioms(bad, {2, true});
  EXPECT_GT(all.find("jacobi")->witnesses.size(), 1U);
  EXPECT_TRUE(fixtures::witnesses_reproduce(lie_identities(bad), all, "jacobi"));
}

TEST(LieAxioms, AnticommutativityAndParityMutations) {
  const LieHandle gl = gl_supertrace(1, 1).algebra;
  // [E01, E01] = E00 + E11 would be allowed; [E00, E00] = E00 breaks anticommutativity.
  EXPECT_FALSE(check_lie_axioms(fixtures::bump_bracket(gl, {0, 0, 0}, 1)).passed("anticommutativity"));
  // [E00, E11] = E01 has the wrong parity.
  const Report r = check_lie_axioms(fixtures::bump_bracket(gl, {0, 3, 1}, 1));
  EXPECT_FALSE(r.passed("parity"));
  EXPECT_EQ(r.find("parity")->witnesses.front().index, (std::vector<std::size_t>{0, 3}));
}

TEST(Module, SignFlipBreaksRepresentation) {
  const MetricModuleTriple t = gl_supertrace(1, 1);
  std::vector<Matrix> rho = t.module.rho_all();
  rho[1](0, 1) = -1;
  const SuperModule bad = SuperModule::from_matrices(t.algebra, t.module.space(), rho);
  const Report r = check_module(bad);
  expect_only_failure(r, "representation");
  EXPECT_TRUE(fixtures::witnesses_reproduce(module_identities(bad), r, "representation"));
}

TEST(Form, TraceFormIsNotSupersymmetric) {
  const MetricModuleTriple t = gl_supertrace(1, 1);
  Matrix trace_form(4, 4);
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      trace_form(a, b) = Scalar::rational(oracle::trace(oracle::mul(oracle::unit(2, 2, a / 2, a % 2),
                                                                     oracle::unit(2, 2, b / 2, b % 2))));
    }
  }
  const Report r = check_form_b(t.algebra, trace_form);
  ASSERT_FALSE(r.passed("supersymmetric"));
  EXPECT_EQ(r.find("supersymmetric")->witnesses.front().index, (std::vector<std::size_t>{1, 2}));
  EXPECT_TRUE(fixtures::witnesses_reproduce(form_identities(t.algebra, trace_form), r, "supersymmetric"));
}

TEST(Form, ZeroFormIsDegenerate) {
  const MetricModuleTriple t = gl_supertrace(1, 1);
  const Report r = check_form_b(t.algebra, Matrix(4, 4));
  expect_only_failure(r, "nondegenerate");
  EXPECT_THROW(check_form_b(t.algebra, Matrix(3, 3)), std::invalid_argument);
}

TEST(Form, OddBlockBreaksHomogeneity) {
  const MetricModuleTriple t = gl_supertrace(1, 1);
  Matrix b = t.form;
  b(0, 1) = b(1, 0) = 1;
  EXPECT_FALSE(check_form_b(t.algebra, b).passed("homogeneous"));
}

TEST(DualModule, EvenCaseIsMinusTranspose) {
  const MetricModuleTriple t = gl_supertrace(2, 0);
  const SuperModule d = dual_module_left(t.module);
  for (std::size_t i = 0; i < t.algebra->dim(); ++i) {
    EXPECT_EQ(d.rho(i), -t.module.rho(i).transpose());
    EXPECT_EQ(dual_module_right(t.module).rho(i), d.rho(i));
  }
}

TEST(DualModule, CanonicalPairingIsInvariant) {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}}) {
    const MetricModuleTriple t = gl_supertrace(m, n);
    const SuperModule& M = t.module;
    const SuperModule left = dual_module_left(M), right = dual_module_right(M);
    EXPECT_TRUE(check_module(left).passed());
    EXPECT_TRUE(check_module(right).passed());
    const auto& ls = t.algebra->space();
    for (std::size_t x = 0; x < t.algebra->dim(); ++x) {
      for (std::size_t f = 0; f < M.dim(); ++f) {
        for (std::size_t v = 0; v < M.dim(); ++v) {
          // <x.f, v> = -eta_{x,f} <f, x.v> for the left dual, eta_{x,v} for the right one.
          const Scalar xf_v = left.rho(x)(v, f), f_xv = M.rho(x)(f, v);
          EXPECT_EQ(xf_v, apply_sign(-oracle::eta({ls.parity(x), M.space().parity(f)}), f_xv));
          EXPECT_EQ(right.rho(x)(v, f), apply_sign(-oracle::eta({ls.parity(x), M.space().parity(v)}), f_xv));
        }
      }
    }
  }
}

TEST(DualModule, IteratedDualsReturnToTheModule) {
  const MetricModuleTriple t = gl_supertrace(2, 1);
  const SuperModule& M = t.module;
  const SuperModule rl = dual_module_right(dual_module_left(M));
  const SuperModule ll = dual_module_left(dual_module_left(M));
  const SuperModule llll = dual_module_left(dual_module_left(ll));
  bool squared_differs = false;
  for (std::size_t i = 0; i < t.algebra->dim(); ++i) {
    EXPECT_EQ(rl.rho(i), M.rho(i));
    EXPECT_EQ(llll.rho(i), M.rho(i));
    squared_differs = squared_differs || !(ll.rho(i) == M.rho(i));
  }
  EXPECT_TRUE(squared_differs);
}

TEST(TensorModule, MatchesLeibnizRuleBruteForce) {
  const MetricModuleTriple t = gl_supertrace(1, 1);
  const SuperModule& M = t.module;
  const SuperModule T = tensor_module(M, M);
  EXPECT_TRUE(check_module(T).passed());
  for (std::size_t x = 0; x < 4; ++x) {
    const Parity px = t.algebra->space().parity(x);
    for (std::size_t a = 0; a < 2; ++a) {
      for (std::size_t b = 0; b < 2; ++b) {
        // x.(v_a (x) v_b) = x.v_a (x) v_b + eta_{x,a} v_a (x) x.v_b
        oracle::Dense expect = oracle::zeros(2, 2);
        for (std::size_t c = 0; c < 2; ++c) {
          expect[c][b] += M.rho(x)(c, a).value();
          expect[a][c] += oracle::eta({px, M.space().parity(a)}) * M.rho(x)(c, b).value();
        }
        EXPECT_EQ(T.rho(x).column(a * 2 + b), oracle::from_dense(expect));
      }
    }
  }
}

TEST(TensorModule, AssociativeOnTheNestedBasis) {
  const MetricModuleTriple t = gl_supertrace(1, 1);
  const SuperModule& M = t.module;
  const SuperModule left = tensor_module(tensor_module(M, M), M);
  const SuperModule right = tensor_module(M, tensor_module(M, M));
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(left.rho(i), right.rho(i));
}

TEST(TensorModule, DualOfTensorThroughTheTensorPairing) {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}}) {
    const MetricModuleTriple t = gl_supertrace(m, n);
    const SuperModule& M = t.module;
    const SuperModule dual_tensor = dual_module_left(tensor_module(M, M));
    const SuperModule tensor_dual = tensor_module(dual_module_left(M), dual_module_left(M));
    const PairingForm can = PairingForm::canonical(M.space());
    const Matrix q = tensor_pairing(can, can).matrix;
    // f (x) g |-> <f (x) g, .> is an isomorphism of modules.
    EXPECT_TRUE(sweep(module_map_identity(tensor_dual, dual_tensor, q.transpose())).passed);
    // Without the eta_{g,v} sign the map is not equivariant.
    EXPECT_FALSE(sweep(module_map_identity(tensor_dual, dual_tensor, Matrix::identity(q.rows()))).passed);
  }
}

TEST(TensorModule, DifferentAlgebrasAreRejected) {
  const MetricModuleTriple a = gl_supertrace(1, 1), b = gl_supertrace(2, 0);
  EXPECT_THROW(tensor_module(a.module, b.module), AlgebraMismatch);
  EXPECT_THROW(direct_sum_modules(a.module, b.module), AlgebraMismatch);
}

TEST(DirectSum, DimensionsAndBlocks) {
  const MetricModuleTriple a = gl_supertrace(1, 1), b = gl_supertrace(2, 0);
  const MetricModuleTriple s = direct_sum({a, b});
  EXPECT_EQ(s.algebra->dim(), 8U);
  EXPECT_EQ(s.module.dim(), 4U);
  EXPECT_EQ(s.algebra->space().odd_dim(), 2U);
  EXPECT_TRUE(check_triple(s).passed());
  // gl(1|1) acts by zero on the second summand.
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t r = 2; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) EXPECT_TRUE(s.module.rho(i)(r, c).is_zero());
    }
  }
  EXPECT_THROW(direct_sum({}), std::invalid_argument);
}

TEST(RepresentationKernel, Cases) {
  EXPECT_TRUE(is_faithful(gl_supertrace(1, 1).module));
  const MetricModuleTriple nf = nonfaithful_fixture();
  const auto k = representation_kernel(nf.module);
  ASSERT_EQ(k.size(), 1U);
  EXPECT_TRUE(same_subspace(k, {unit_vector(5, 4)}, 5));
  const LieHandle gl = gl_supertrace(1, 1).algebra;
  EXPECT_EQ(representation_kernel(trivial_module(gl, SuperSpace::standard(1, 0))).size(), 4U);
  // gl(2) acting on Hom of the natural module with itself has the identity in its kernel.
  const MetricModuleTriple g2 = gl_supertrace(2, 0);
  const auto end_kernel = representation_kernel(hom_module(g2.module, g2.module));
  ASSERT_EQ(end_kernel.size(), 1U);
  EXPECT_TRUE(same_subspace(end_kernel, {unit_vector(4, 0) + unit_vector(4, 3)}, 4));
}

TEST(HomModule, TrivialTargetGivesTheLeftDual) {
  const MetricModuleTriple t = gl_supertrace(2, 1);
  const SuperModule h = hom_module(t.module, trivial_module(t.algebra, SuperSpace::standard(1, 0)));
  const SuperModule d = dual_module_left(t.module);
  for (std::size_t i = 0; i < t.algebra->dim(); ++i) EXPECT_EQ(h.rho(i), d.rho(i));
  EXPECT_TRUE(check_module(hom_module(t.module, t.module)).passed());
}

TEST(HomFixed, MultiplicitySpaceOfAnIsotypicModule) {
  const MetricModuleTriple t = gl_supertrace(1, 1);
  const SuperModule v_s = tensor_module(t.module, trivial_module(t.algebra, SuperSpace::standard(2, 0)));
  const LieHandle T = abelian(1);
  const SuperModule v_t =
      SuperModule::from_matrices(T, v_s.space(), {kronecker(Matrix::identity(2), fixtures::diag({1, 2}))});
  const HomSpace h = hom_fixed(t.module, v_s, v_t);
  ASSERT_EQ(h.maps.size(), 2U);
  EXPECT_EQ(h.even_count, 2U);
  const Matrix& rho = h.t_module.rho(0);
  EXPECT_EQ(rho(0, 0) + rho(1, 1), Scalar(3));
  EXPECT_EQ(rank(rho - Matrix::identity(2)), 1U);
  EXPECT_EQ(rank(rho - fixtures::diag({2, 2})), 1U);
  EXPECT_EQ(rank(h.evaluation.matrix), 4U);
  // A T-action that does not commute with S is rejected.
  const SuperModule noncommuting =
      SuperModule::from_matrices(T, v_s.space(), {kronecker(t.module.rho(1), Matrix::identity(2))});
  EXPECT_THROW(hom_fixed(t.module, v_s, noncommuting), std::invalid_argument);
}

TEST(Subalgebra, ClosedAndNotClosedSpans) {
  const LieHandle gl = gl_supertrace(1, 1).algebra;
  // Diagonal matrices form an abelian subalgebra.
  const LieHandle h = subalgebra(gl, {unit_vector(4, 0), unit_vector(4, 3)});
  EXPECT_EQ(h->dim(), 2U);
  EXPECT_TRUE(h->bracket_tensor().empty());
  EXPECT_THROW(subalgebra(gl, {unit_vector(4, 1), unit_vector(4, 2)}), std::invalid_argument);
}
