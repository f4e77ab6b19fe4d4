#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "superpair/tensorops/tensorops.hpp"

namespace superpair {

/// p x q matrices, E_ij at index i * q + j, {x,y,z} = x y^T z + z y^T x, t(x,y) = tr(x y^T).
GjspObject jordan_pair_type_I(int p, int q, const Field& field = Field::rationals());

/// F^n with {x,y,z} = q(x,y) z + q(z,y) x - q(x,z) y and t = q. The default q is
/// the standard scalar product; a supplied q must be symmetric and nondegenerate.
GjspObject jordan_pair_type_IV(int n, const std::optional<Matrix>& q = std::nullopt,
                               const Field& field = Field::rationals());

/// n x n matrices with {x,y,z} = x y^T z + z y^T x - z x^T y and t(x,y) = tr(x y^T).
GjspObject kantor_pair_Mn(int n, const Field& field = Field::rationals());

/// gl(m|n) on E_ij (index i * (m+n) + j, parity p(i) + p(j)), the natural module
/// and b(x, y) = str(xy).
MetricModuleTriple gl_supertrace(int m, int n, const Field& field = Field::rationals());

/// gl(1|1) + F z with z even, central and acting by zero on the natural module;
/// b = str _|_ (z, z) |-> 1. z is the last basis element.
MetricModuleTriple nonfaithful_fixture(const Field& field = Field::rationals());

/// Both sides of a worked-example isomorphism and the check of the map between them.
struct IsoWitness {
  GjspObject source;  // tensor side, shifted by -2
  GjspObject target;  // matrix side
  PairMap map;        // e_i (x) e_j |-> E_ij
  Report report;

  bool passed() const { return report.passed(); }
};

/// (V^I_{1,p} (x) V^I_{1,q})^[-2] -> V^I_{p,q}.
IsoWitness paper_iso_type_I(int p, int q, const CheckOptions& options = {});
/// (V^I_{1,n} (x) V^IV_n)^[-2] -> V_{M_n}. For n = 1 the one-dimensional
/// parameters are compared as well ("parameters").
IsoWitness paper_iso_Mn(int n, const CheckOptions& options = {});

struct CatalogEntry {
  std::string name;
  std::vector<std::string> parameters;
  std::variant<GjspObject, MetricModuleTriple> object;
  std::string note;
};

/// Names accepted by build_catalog_entry, with their parameter syntax.
const std::vector<std::pair<std::string, std::string>>& catalog_names();

/// Throws std::invalid_argument on an unknown name or bad parameters.
CatalogEntry build_catalog_entry(const std::string& name, const std::vector<std::string>& parameters,
                                 const Field& field = Field::rationals());

}  // namespace superpair
