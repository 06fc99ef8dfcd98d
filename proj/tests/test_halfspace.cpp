#include <gtest/gtest.h>

#include <cmath>

#include "parityns/errors.hpp"
#include "parityns/halfspace.hpp"
#include "test_util.hpp"

using namespace parityns;
using testutil::rel_diff;

TEST(Extend, SymmetricRestrictsBackToIdentity) {
  const HalfField h = omsy_half_data(16, 1.0, 1);
  const VectorField u = extend(h, ExtensionKind::symmetric);
  EXPECT_EQ(restrict_half(u).data, h.data);
}

TEST(Extend, SymmetricOfOmsyDataIsTheOriginalKind) {
  VectorField full = random_symmetric_solenoidal(parse_tuple("(100,010,001)"), 16, 4);
  const VectorField u = extend(restrict_half(full), ExtensionKind::symmetric);
  EXPECT_LT(rel_diff(u, full), 1e-13);
  EXPECT_EQ(*measure_tuple(u), parse_tuple("(100,010,001)"));
  EXPECT_TRUE(check_omsy(u));
  EXPECT_LE(relative_divergence(u), 1e-8);
  for (int j2 = 0; j2 < 16; ++j2)
    for (int j1 = 0; j1 < 16; ++j1) {
      EXPECT_EQ(u[2](j1, j2, 0), cplx(0.0));
      EXPECT_EQ(u[2](j1, j2, 8), cplx(0.0));
    }
}

TEST(Extend, EnergyOfExtensions) {
  const HalfField h = omsy_half_data(16, 1.0, 2);
  const VectorField sym = extend(h, ExtensionKind::symmetric);
  const VectorField zero = extend(h, ExtensionKind::zero);
  const auto ss = energy_split(sym, 2);
  EXPECT_NEAR(ss.upper, ss.lower, 1e-12 * ss.lower);
  const auto zs = energy_split(zero, 2);
  EXPECT_EQ(zs.upper, 0.0);
  EXPECT_EQ(zs.planes, 0.0);
  EXPECT_NEAR(energy(zero), ss.lower, 1e-12 * ss.lower);
  EXPECT_NEAR(ss.lower + ss.upper, 2.0 * energy(zero), 1e-12 * ss.lower);
}

TEST(Extend, IncompatibleTraceRejected) {
  // u3 = cos x3 + 2 has a nonzero trace on x3 = 0, but the symmetric extension makes u3 odd.
  const int n = 16;
  const VectorField full{Grid3(n), Grid3(n), sample(n, [](double, double, double x3) { return std::cos(x3) + 2.0; })};
  EXPECT_THROW(extend(restrict_half(full), ExtensionKind::symmetric), NotCompatible);
  EXPECT_NO_THROW(extend(restrict_half(full), ExtensionKind::antisymmetric));
  EXPECT_GT(trace_indicator(restrict_half(full), 2), 1e-6);
}

TEST(CheckOmsy, Examples) {
  const int n = 16;
  const VectorField good(sample(n, [](double x1, double x2, double x3) { return std::sin(x1) * std::cos(x2) * std::sin(x3); }),
                         sample(n, [](double x1, double x2, double x3) { return std::cos(x1) * std::sin(x2) * std::sin(x3); }),
                         sample(n, [](double x1, double x2, double x3) { return 2.0 * std::cos(x1) * std::cos(x2) * std::cos(x3); }));
  EXPECT_LE(relative_divergence(good), 1e-12);
  EXPECT_TRUE(check_omsy(good));
  VectorField bad = good;
  bad[0] = sample(n, [](double x1, double x2, double x3) { return std::cos(x1) * std::cos(x2) * std::sin(x3); });
  EXPECT_FALSE(check_omsy(bad));
  EXPECT_FALSE(check_omsy(testutil::random_solenoidal(n, 9)));
}

TEST(HalfspaceRun, SymmetricConservesSplitAndKind) {
  SolverConfig cfg;
  const HalfspaceReport r = halfspace_run(omsy_half_data(16, 1e-2, 3), ExtensionKind::symmetric, cfg);
  EXPECT_TRUE(r.omsy);
  EXPECT_TRUE(r.converged);
  EXPECT_LE(r.max_imbalance, 1e-8);
  EXPECT_TRUE(r.split_equal);
  EXPECT_TRUE(r.labels_preserved);
  EXPECT_EQ(*r.initial_kind, parse_tuple("(100,010,001)"));
}

TEST(HalfspaceRun, AntisymmetricLosesItsKind) {
  SolverConfig cfg;
  const HalfspaceReport r = halfspace_run(antisym_half_data(16, 1e-2, 3), ExtensionKind::antisymmetric, cfg);
  ASSERT_TRUE(r.initial_kind.has_value());
  EXPECT_EQ(*r.initial_kind, parse_tuple("(101,011,000)"));
  ASSERT_TRUE(r.b_label.has_value());
  EXPECT_NE(*r.b_label, *r.initial_kind);
  EXPECT_FALSE(r.labels_preserved);
  EXPECT_TRUE(r.max_imbalance > 1e-4 || *r.b_label != *r.initial_kind);
}

TEST(HalfspaceRun, ZeroExtensionLeaksOutside) {
  SolverConfig cfg;
  const HalfspaceReport r = halfspace_run(omsy_half_data(16, 1e-2, 3), ExtensionKind::zero, cfg);
  EXPECT_GT(r.outside_energy_first, 0.0);
}
