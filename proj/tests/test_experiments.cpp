#include <gtest/gtest.h>

#include <algorithm>

#include "parityns/enumerate.hpp"
#include "parityns/experiments.hpp"
#include "parityns/spectral.hpp"

using namespace parityns;

TEST(Beltrami, FieldProperties) {
  const VectorField u = beltrami_field(BeltramiProfile{}, 32);
  EXPECT_LE(relative_divergence(u), 1e-12);
  const auto t = measure_tuple(u);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(*t, beltrami_kind());
  EXPECT_EQ(to_string(*t), "(010,100,000z)");
  for (double s : {0.0, 0.05, 0.1}) EXPECT_LE(beltrami_residual(u, s), 1e-8) << "t=" << s;
}

TEST(Beltrami, ResidualStableUnderHeatFlow) {
  BeltramiProfile p;
  p.modes = {{0, 5}, {3, 4}, {4, 3}, {5, 0}};
  p.coeffs = {0.3, 1.0, -0.7, 0.2};
  const VectorField u = beltrami_field(p, 32);
  const double r0 = beltrami_residual(u, 0.0);
  for (double s : {0.02, 0.05, 0.1}) EXPECT_LE(beltrami_residual(u, s), r0 + 1e-10);
}

TEST(Beltrami, OffShellProfileRejected) {
  BeltramiProfile p;
  p.modes = {{1, 0}, {1, 1}};
  EXPECT_THROW(p.validate(), std::invalid_argument);
  EXPECT_THROW(beltrami_field(p, 16), std::invalid_argument);
}

TEST(Beltrami, GenericStreamFunctionIsNotBeltrami) {
  // Two different Laplacian shells: the surrogate needs a single shell.
  const int n = 32;
  const VectorField u(sample(n, [](double x1, double x2, double) { return -2.0 * std::cos(x1) * std::sin(2 * x2) - std::sin(x2); }),
                      sample(n, [](double x1, double x2, double) { return std::sin(x1) * std::cos(2 * x2); }), Grid3(n));
  EXPECT_LE(relative_divergence(u), 1e-12);
  EXPECT_GT(beltrami_residual(u, 0.0), 1e-3);
}

TEST(UnmatchedPair, PairProperties) {
  const Example41 ex = example41_pair(32, 1);
  EXPECT_LE(relative_divergence(ex.u), 1e-12);
  EXPECT_LE(relative_divergence(ex.v), 1e-12);
  const auto tu = measure_tuple(ex.u), tv = measure_tuple(ex.v);
  ASSERT_TRUE(tu.has_value());
  ASSERT_TRUE(tv.has_value());
  const Parity e3(0, 0, 1);
  EXPECT_EQ(*tu, solenoidal_tuple(e3, e3));
  EXPECT_EQ(*tv, solenoidal_tuple(Parity{}, e3));
  EXPECT_FALSE(matched_check(*tu, *tv));
  EXPECT_FALSE(bilinear_B_label(*tu, *tv).has_value());

  const VectorField c = C_op(ex.u, ex.v);
  int unlabelled = 0;
  for (int l = 0; l < 3; ++l) unlabelled += !measure_parity(c[l]).label.has_value();
  EXPECT_GE(unlabelled, 1);
}

TEST(UnmatchedPair, GridProductOfComponentsIsNotSymmetric) {
  const Example41 ex = example41_pair(16, 2);
  Grid3 p(16);
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = ex.u[0][i] * ex.v[0][i];
  EXPECT_FALSE(measure_parity(p).label.has_value());
}

TEST(UnmatchedPair, DecompositionPartsArePairwiseMatched) {
  const Example41 ex = example41_pair(16, 3);
  const Parity beta(0, 0, 0);
  const auto up = decompose_matched(ex.u, beta), vp = decompose_matched(ex.v, beta);
  for (const auto& a : up)
    for (const auto& b : vp) {
      const auto ta = measure_tuple(a), tb = measure_tuple(b);
      ASSERT_TRUE(ta && tb);
      EXPECT_TRUE(matched_check(*ta, *tb)) << to_string(*ta) << " x " << to_string(*tb);
    }
}

TEST(Rigidity, RealScan) {
  RigidityConfig cfg;
  cfg.seeds = {1};
  const RigidityReport r = rigidity_scan_real(cfg);
  ASSERT_EQ(r.per_kind.size(), 30u);
  ASSERT_EQ(r.preserved_by_type.size(), 1u);
  EXPECT_EQ(r.preserved_by_type[0], parse_tuple("(100,010,001)"));
  for (const auto& k : r.per_kind) {
    EXPECT_TRUE(k.error.empty()) << k.error;
    EXPECT_TRUE(k.numeric_consistent) << to_string(k.kind);
    if (k.kind == parse_tuple("(100,010,001)")) EXPECT_EQ(*k.b_label, k.kind);
    if (k.kind == parse_tuple("(000c,000c,000c)")) {
      EXPECT_EQ(k.b_norm_rel[0], 0.0);
      EXPECT_TRUE(k.beltrami_escape);
    }
  }
  const std::vector<TypeTuple> escapes{parse_tuple("(000c,000c,000c)")};
  EXPECT_EQ(r.beltrami_escapes, escapes);
}

TEST(Rigidity, RealScanSeedIndependent) {
  RigidityConfig cfg;
  cfg.quad_points = 3;
  std::vector<std::vector<TypeTuple>> sets;
  for (std::uint64_t s : {11, 12, 13}) {
    cfg.seeds = {s};
    sets.push_back(rigidity_scan_real(cfg).preserved_kinds);
  }
  EXPECT_EQ(sets[0], sets[1]);
  EXPECT_EQ(sets[1], sets[2]);
}

TEST(Rigidity, ComplexScan) {
  RigidityConfig cfg;
  cfg.seeds = {1};
  cfg.quad_points = 3;
  const RigidityReport r = rigidity_scan_complex(cfg);
  ASSERT_EQ(r.per_kind.size(), 64u);
  ASSERT_EQ(r.preserved_by_type.size(), 8u);
  for (const auto& t : r.preserved_by_type) {
    for (int l = 0; l < 3; ++l) EXPECT_EQ(t[l].re().parity, Parity::unit(l));
  }
  EXPECT_TRUE(std::count(r.preserved_by_type.begin(), r.preserved_by_type.end(), solenoidal_tuple(Parity{}, Parity(1, 1, 1))));
  EXPECT_FALSE(std::count(r.preserved_by_type.begin(), r.preserved_by_type.end(), solenoidal_tuple(Parity(1, 0, 0), Parity{})));
  for (const auto& k : r.per_kind) EXPECT_TRUE(k.numeric_consistent) << to_string(k.kind);
}
