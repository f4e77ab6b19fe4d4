#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's linear algebra or constructions; values are rebuilt from dense
// matrices and textbook formulas.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "superpair/catalog/catalog.hpp"

namespace oracle {

using Dense = std::vector<std::vector<mpq_class>>;

Dense zeros(std::size_t r, std::size_t c);
Dense mul(const Dense& a, const Dense& b);
Dense transpose(const Dense& a);
Dense add(const Dense& a, const Dense& b);
Dense scale(const Dense& a, const mpq_class& s);
mpq_class trace(const Dense& a);

/// Row reduction written from scratch over mpq.
std::size_t rank(Dense m);

/// E_ij as a dense rows x cols matrix.
Dense unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);
/// Coordinates on the E_ij basis (index i * cols + j) to a dense matrix and back.
Dense to_dense(const superpair::Vector& v, std::size_t rows, std::size_t cols);
superpair::Vector from_dense(const Dense& m);

/// (-1)^(sum over pairs of products) by explicit counting.
int eta(const std::vector<int>& parities);

/// Parity of index k in gl(m|n): 0 for k < m.
int gl_parity(int m, std::size_t k);
/// Matrix superbracket xy - eta yx of E_ij and E_kl in gl(m|n).
Dense gl_bracket(int m, int n, std::size_t a, std::size_t b);
/// str(E_a E_b).
mpq_class gl_supertrace_form(int m, int n, std::size_t a, std::size_t b);

/// x y^T z + z y^T x for p x q matrices.
Dense type_I_triple(const Dense& x, const Dense& y, const Dense& z);
/// x y^T z + z y^T x - z x^T y.
Dense kantor_triple(const Dense& x, const Dense& y, const Dense& z);
/// q(x,y) z + q(z,y) x - q(x,z) y with q the standard scalar product.
superpair::Vector type_IV_triple(const superpair::Vector& x, const superpair::Vector& y,
                                 const superpair::Vector& z);

/// Small random rationals with numerator in [-3, 3] and denominator in [1, 3].
superpair::Scalar random_scalar(std::mt19937_64& rng);
superpair::Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density = 0.6);

}  // namespace oracle

namespace fixtures {

using namespace superpair;

Matrix diag(const std::vector<Scalar>& d);
/// Forward image of gl(1|1) with the natural module and the supertrace form.
GjspObject gl11_pair();
/// Copy of a pair with one structure constant changed by delta.
Gjsp bump_product(const Gjsp& v, Sign s, SparseTensor<4>::Index idx, const Scalar& delta);
LieHandle bump_bracket(const LieHandle& l, SparseTensor<3>::Index idx, const Scalar& delta);
/// Smallest ideal of L containing the seeds.
std::vector<Vector> ideal_closure(const LieHandle& l, const std::vector<Vector>& seeds);
/// Split of instr(I_{1,2} (x) I_{1,3}) into the two factor ideals and W = span{e_0, e_3}.
FactorSplit natural_split_I12_I13(const GjspObject& tensor);

/// Re-evaluates every witness of `name` against the identity of the same name.
bool witnesses_reproduce(const std::vector<Identity>& identities, const Report& report, const std::string& name);

}  // namespace fixtures
