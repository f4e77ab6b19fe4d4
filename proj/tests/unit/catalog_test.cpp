#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace superpair;

TEST(Catalog, TypeIMatchesTheMatrixFormula) {
  for (auto [p, q] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 3}, {3, 2}}) {
    const GjspObject o = jordan_pair_type_I(p, q);
    const std::size_t n = p * q;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const auto ex = oracle::unit(p, q, x / q, x % q), ey = oracle::unit(p, q, y / q, y % q);
        // t(x, y) = tr(x y^T)
        EXPECT_EQ(o.pairing.matrix(x, y).value(), oracle::trace(oracle::mul(ex, oracle::transpose(ey))));
        for (std::size_t z = 0; z < n; ++z) {
          const auto ez = oracle::unit(p, q, z / q, z % q);
          EXPECT_EQ(o.pair.D(Sign::minus, x, y).column(z), oracle::from_dense(oracle::type_I_triple(ex, ey, ez)));
        }
      }
    }
    EXPECT_TRUE(check_object(o).passed());
  }
  EXPECT_THROW(jordan_pair_type_I(0, 2), std::invalid_argument);
}

TEST(Catalog, KantorPairMatchesTheMatrixFormula) {
  for (std::size_t n : {1U, 2U, 3U}) {
    const GjspObject o = kantor_pair_Mn(n);
    const std::size_t d = n * n;
    for (std::size_t x = 0; x < d; ++x) {
      for (std::size_t y = 0; y < d; ++y) {
        const auto ex = oracle::unit(n, n, x / n, x % n), ey = oracle::unit(n, n, y / n, y % n);
        for (std::size_t z = 0; z < d; ++z) {
          const auto ez = oracle::unit(n, n, z / n, z % n);
          const Vector expect = oracle::from_dense(oracle::kantor_triple(ex, ey, ez));
          EXPECT_EQ(o.pair.D(Sign::minus, x, y).column(z), expect);
          EXPECT_EQ(o.pair.D(Sign::plus, x, y).column(z), expect);
        }
      }
    }
    EXPECT_TRUE(check_object(o).passed()) << n;
  }
  // n = 1: {e, e, e} = e.
  EXPECT_EQ(kantor_pair_Mn(1).pair.D(Sign::minus, 0, 0), Matrix::from_rows({{1}}));
  EXPECT_FALSE(classify_flavor(kantor_pair_Mn(2).pair).jordan_superpair);
  EXPECT_THROW(kantor_pair_Mn(0), std::invalid_argument);
}

TEST(Catalog, TypeIVWithAGeneralForm) {
  const Matrix q = Matrix::from_rows({{1, 1}, {1, 3}});
  const GjspObject o = jordan_pair_type_IV(2, q);
  EXPECT_EQ(o.pairing.matrix, q);
  EXPECT_TRUE(check_object(o).passed());
  // {x, y, z} = q(x,y) z + q(z,y) x - q(x,z) y on basis vectors.
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) {
      for (std::size_t z = 0; z < 2; ++z) {
        Vector expect = scaled(unit_vector(2, z), q(x, y)) + scaled(unit_vector(2, x), q(z, y));
        expect = expect - scaled(unit_vector(2, y), q(x, z));
        EXPECT_EQ(o.pair.D(Sign::minus, x, y).column(z), expect);
      }
    }
  }
  EXPECT_THROW(jordan_pair_type_IV(2, Matrix::from_rows({{1, 1}, {0, 1}})), std::invalid_argument);
  EXPECT_THROW(jordan_pair_type_IV(2, Matrix::from_rows({{1, 1}, {1, 1}})), std::invalid_argument);
}

TEST(Catalog, PrimeFieldObjects) {
  const Field f5 = Field::prime(5);
  const GjspObject o = jordan_pair_type_I(2, 2, f5);
  EXPECT_EQ(o.pair.field(), f5);
  EXPECT_TRUE(check_object(o).passed());
  const MetricModuleTriple t = gl_supertrace(1, 1, Field::prime(7));
  EXPECT_TRUE(check_triple(t).passed());
  EXPECT_TRUE(roundtrip_check(t).passed());
}

TEST(Catalog, NonFaithfulFixture) {
  const MetricModuleTriple t = nonfaithful_fixture();
  EXPECT_TRUE(check_triple(t).passed());
  EXPECT_FALSE(is_faithful(t.module));
  EXPECT_EQ(t.algebra->space().parity(4), 0);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_TRUE(is_zero_vector(t.algebra->bracket(4, i)));
  const auto perp = orthogonal_complement(t.form, instr_LM(t).basis, &t.algebra->space());
  EXPECT_TRUE(same_subspace(perp, representation_kernel(t.module), 5));
}

TEST(Catalog, FirstWorkedIsomorphism) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}, {2, 3}}) {
    const IsoWitness w = paper_iso_type_I(p, q);
    EXPECT_TRUE(w.passed()) << p << "," << q << " " << ::testing::PrintToString(w.report.failures());
    EXPECT_NE(w.report.find("form"), nullptr);
    EXPECT_EQ(w.source.pairing.matrix, w.target.pairing.matrix);
  }
}

TEST(Catalog, SecondWorkedIsomorphism) {
  for (int n : {1, 2, 3}) {
    const IsoWitness w = paper_iso_Mn(n);
    EXPECT_TRUE(w.passed()) << n << " " << ::testing::PrintToString(w.report.failures());
  }
  EXPECT_NE(paper_iso_Mn(1).report.find("parameters"), nullptr);
  // Without the shift the map is not a homomorphism.
  const GjspObject unshifted = gjsp_tensor(jordan_pair_type_I(1, 2), jordan_pair_type_IV(2));
  const GjspObject target = kantor_pair_Mn(2);
  EXPECT_FALSE(check_pair_hom(identity_map(target.pair), unshifted.pair, target.pair).passed());
}

TEST(Catalog, EveryEntryBuildsAndIsAMember) {
  const std::map<std::string, std::vector<std::string>> params{
      {"type_I", {"2", "3"}}, {"type_IV", {"3"}},         {"kantor_Mn", {"2"}}, {"gl_supertrace", {"2", "1"}},
      {"nonfaithful", {}},    {"onedim", {"-3/2", "1"}}, {"gl_pair", {"1", "1"}},
  };
  ASSERT_EQ(catalog_names().size(), params.size());
  for (const auto& [name, syntax] : catalog_names()) {
    ASSERT_TRUE(params.count(name)) << name;
    const CatalogEntry e = build_catalog_entry(name, params.at(name));
    EXPECT_EQ(e.name, name);
    EXPECT_FALSE(e.note.empty());
    if (const auto* o = std::get_if<GjspObject>(&e.object)) {
      EXPECT_TRUE(check_object(*o).passed()) << name;
    } else {
      EXPECT_TRUE(check_triple(std::get<MetricModuleTriple>(e.object)).passed()) << name;
    }
  }
  EXPECT_EQ(onedim_parameter(std::get<GjspObject>(build_catalog_entry("onedim", {"-3/2", "1"}).object)),
            (ShiftParameter{Scalar(-3, 2), 1}));
}

TEST(Catalog, BadNamesAndParameters) {
  EXPECT_THROW(build_catalog_entry("type_V", {}), std::invalid_argument);
  EXPECT_THROW(build_catalog_entry("type_I", {"2"}), std::invalid_argument);
  EXPECT_THROW(build_catalog_entry("type_I", {"2", "x"}), std::invalid_argument);
  EXPECT_THROW(build_catalog_entry("type_I", {"0", "2"}), std::invalid_argument);
  EXPECT_THROW(build_catalog_entry("onedim", {"1", "2"}), std::invalid_argument);
  EXPECT_THROW(build_catalog_entry("gl_supertrace", {"0", "0"}), std::invalid_argument);
}
