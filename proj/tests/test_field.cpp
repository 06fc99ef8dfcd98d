#include <gtest/gtest.h>

#include <cmath>

#include "parityns/enumerate.hpp"
#include "parityns/errors.hpp"
#include "parityns/field.hpp"
#include "parityns/selftest.hpp"
#include "parityns/spectral.hpp"
#include "test_util.hpp"

using namespace parityns;
using testutil::rel_diff;

namespace {

double max_abs(const Grid3& g) {
  double m = 0.0;
  for (const auto& v : g.values()) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

TEST(Grid, RejectsBadSizes) {
  EXPECT_THROW(Grid3(6), std::invalid_argument);
  EXPECT_THROW(Grid3(9), std::invalid_argument);
  EXPECT_NO_THROW(Grid3(8));
}

TEST(Reflect, Examples) {
  const int n = 16;
  const Grid3 f = testutil::random_complex(n, 11);
  for (int a = 0; a < 3; ++a) EXPECT_EQ(reflect(reflect(f, a), a), f);
  const Grid3 s = sample(n, [](double x1, double, double) { return std::sin(x1); });
  EXPECT_LT(max_abs(reflect(s, 0) + s), 1e-14);
  const Grid3 c = sample(n, [](double, double x2, double) { return std::cos(x2); });
  EXPECT_LT(max_abs(reflect(c, 1) - c), 1e-14);
}

TEST(ParityProject, Examples) {
  const int n = 16;
  const Grid3 f = sample(n, [](double x1, double x2, double x3) { return std::sin(x1) * std::cos(x2) * std::cos(x3); });
  EXPECT_LT(rel_diff(parity_project(f, Parity(1, 0, 0)), f), 1e-15);
  EXPECT_LT(max_abs(parity_project(f, Parity{})), 1e-15);
}

TEST(ParityProject, OracleGroupAverage) {
  // Independent oracle: the 8-term group average (1/8) sum_s (-1)^{a.s} f(sigma_s x).
  const int n = 8;
  const Grid3 f = testutil::random_complex(n, 5, 4);
  for (Parity a : all_parities()) {
    Grid3 avg(n);
    for (Parity s : all_parities()) {
      const int sign = __builtin_popcount(a.mask() & s.mask()) % 2 ? -1 : 1;
      avg += reflect(f, s) * cplx(sign / 8.0);
    }
    EXPECT_LT(rel_diff(parity_project(f, a), avg), 1e-14) << to_string(a);
  }
}

TEST(ParityProject, CompletenessIdempotenceOrthogonality) {
  const int n = 16;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const Grid3 f = testutil::random_complex(n, seed, 8);
    Grid3 sum(n);
    for (Parity a : all_parities()) {
      const Grid3 p = parity_project(f, a);
      sum += p;
      EXPECT_LT(rel_diff(parity_project(p, a), p), 1e-13);
      for (Parity b : all_parities())
        if (b != a) EXPECT_LT(l2_norm(parity_project(p, b)) / l2_norm(f), 1e-13);
    }
    EXPECT_LT(rel_diff(sum, f), 1e-13);
  }
}

TEST(MeasureParity, Examples) {
  const int n = 16;
  const auto m1 = measure_parity(sample(n, [](double x1, double x2, double x3) { return std::sin(x1) * std::cos(x2) * std::cos(x3); }));
  ASSERT_TRUE(m1.label.has_value());
  EXPECT_EQ(*m1.label, parse_label("100"));

  const auto m2 = measure_parity(sample(n, [](double x1, double x2, double) { return std::sin(x1) + std::sin(x2); }));
  EXPECT_FALSE(m2.label.has_value());

  const auto m3 = measure_parity(sample(n, [](double, double, double) { return 1.0; }));
  ASSERT_TRUE(m3.label.has_value());
  EXPECT_EQ(*m3.label, parse_label("000c"));

  const auto m4 = measure_parity(Grid3(n));
  ASSERT_TRUE(m4.label.has_value());
  EXPECT_TRUE(m4.label->is_zero());

  const auto m5 = measure_parity(sample(n, [](double x1, double x2, double x3) {
    return cplx(std::sin(x1) * std::sin(x3), std::cos(x1) * std::sin(x2));
  }));
  ASSERT_TRUE(m5.label.has_value());
  EXPECT_EQ(*m5.label, parse_label("101+i010"));
}

TEST(MeasureParity, IncompatibleSumHasNoLabel) {
  // sin x1 + sin x2 is not symmetric: every candidate label fails.
  const int n = 16;
  const auto m = measure_parity(sample(n, [](double x1, double x2, double) { return std::sin(x1) + std::sin(x2); }));
  for (int axis = 0; axis < 2; ++axis) {
    EXPECT_GT(m.re.axes[static_cast<std::size_t>(axis)].even, 1e-3);
    EXPECT_GT(m.re.axes[static_cast<std::size_t>(axis)].odd, 1e-3);
  }
  for (const auto& l : all_labels()) EXPECT_NE(m.label, std::optional<SymLabel>(l));
}

TEST(MeasureParity, ProductRuleOnGrid) {
  const int n = 16;
  const Grid3 a = sample(n, [](double x1, double, double) { return std::sin(x1); });
  const Grid3 b = sample(n, [](double x1, double x2, double) { return std::sin(x1) * std::sin(x2); });
  Grid3 p(n);
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = a[i] * b[i];
  EXPECT_EQ(measure_parity(p).label, product_label(parse_label("100"), parse_label("110")));
}

TEST(MeasureParity, DerivativeCommutesWithLabels) {
  const int n = 16;
  for (Parity a : all_parities()) {
    const Grid3 f = parity_project(random_smooth_field(n, 4, 100 + a.mask()), a);
    const auto mf = measure_parity(f);
    ASSERT_TRUE(mf.label.has_value());
    for (int l = 0; l < 3; ++l) {
      MultiIndex e{0, 0, 0};
      e[static_cast<std::size_t>(l)] = 1;
      const auto md = measure_parity(real_part(derivative(f, e)), 1e-10);
      ASSERT_TRUE(md.label.has_value());
      EXPECT_EQ(*md.label, derivative_label(*mf.label, e));
    }
  }
}

TEST(Divergence, Examples) {
  const int n = 16;
  const VectorField u(sample(n, [](double, double x2, double) { return std::sin(x2); }),
                      sample(n, [](double, double, double x3) { return std::sin(x3); }),
                      sample(n, [](double x1, double, double) { return std::sin(x1); }));
  EXPECT_LT(max_abs(divergence(u)), 1e-12);
  const VectorField v(sample(n, [](double x1, double, double) { return std::sin(x1); }), Grid3(n), Grid3(n));
  const Grid3 want = sample(n, [](double x1, double, double) { return std::cos(x1); });
  EXPECT_LT(max_abs(divergence(v) - want), 1e-12);
}

TEST(Energy, SplitAndTotals) {
  const int n = 16;
  EXPECT_EQ(energy(VectorField(n)), 0.0);
  const auto z = energy_split(VectorField(n), 2);
  EXPECT_EQ(z.lower, 0.0);
  EXPECT_EQ(z.upper, 0.0);

  const VectorField u = testutil::random_solenoidal(n, 4);
  const auto s = energy_split(u, 2);
  EXPECT_NEAR(s.lower + s.upper + s.planes, energy(u), 1e-12 * energy(u));

  // |u|^2 even in x3: halves agree.
  const VectorField w = random_symmetric_solenoidal(parse_tuple("(100,010,001)"), n, 3);
  const auto ws = energy_split(w, 2);
  EXPECT_NEAR(ws.lower, ws.upper, 1e-12 * energy(w));

  // Continuum normalisation: |sin x1|^2 integrates to 4 pi^3.
  const VectorField v(sample(n, [](double x1, double, double) { return std::sin(x1); }), Grid3(n), Grid3(n));
  EXPECT_NEAR(energy(v), 2.0 * std::pow(M_PI, 3), 1e-12);
}

TEST(RandomSymmetricSolenoidal, E1E2E3) {
  const VectorField u = random_symmetric_solenoidal(parse_tuple("(100,010,001)"), 16, 42);
  const auto t = measure_tuple(u);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(*t, parse_tuple("(100,010,001)"));
  EXPECT_LE(relative_divergence(u), 1e-12);
  EXPECT_NEAR(parityns::max_abs(u), 1.0, 1e-15);
}

TEST(RandomSymmetricSolenoidal, ConstantKind) {
  const VectorField u = random_symmetric_solenoidal(parse_tuple("(000c,000c,000c)"), 16, 1);
  EXPECT_EQ(*measure_tuple(u), parse_tuple("(000c,000c,000c)"));
  EXPECT_LT(l2_norm(divergence(u)), 1e-14);
}

TEST(RandomSymmetricSolenoidal, InadmissibleThrows) {
  EXPECT_THROW(random_symmetric_solenoidal(parse_tuple("(111,111,111)"), 16, 1), std::invalid_argument);
}

TEST(RandomSymmetricSolenoidal, MeasuresBackEveryRealKind) {
  for (const auto& kind : census_real().tuples) {
    const VectorField u = random_symmetric_solenoidal(kind, 16, 9);
    const auto t = measure_tuple(u);
    ASSERT_TRUE(t.has_value()) << to_string(kind);
    EXPECT_EQ(*t, kind);
    EXPECT_LE(relative_divergence(u), 1e-12) << to_string(kind);
  }
}

TEST(RandomSymmetricSolenoidal, MeasuresBackEveryComplexKind) {
  for (const auto& kind : census_complex().tuples) {
    const VectorField u = random_symmetric_solenoidal(kind, 8, 9);
    const auto t = measure_tuple(u);
    ASSERT_TRUE(t.has_value()) << to_string(kind);
    EXPECT_EQ(*t, kind);
    EXPECT_LE(relative_divergence(u), 1e-12) << to_string(kind);
  }
}

TEST(DecomposeMatched, PureKind) {
  const VectorField u = random_symmetric_solenoidal(parse_tuple("(100,010,001)"), 16, 2);
  const auto parts = decompose_matched(u, Parity{});
  EXPECT_LT(rel_diff(parts[0], u), 1e-15);
  for (unsigned a = 1; a < 8; ++a) EXPECT_LT(l2_norm(parts[a]), 1e-15);
}

TEST(DecomposeMatched, RandomFieldsAllBetas) {
  const int n = 16;
  for (std::uint64_t seed = 1; seed <= 2; ++seed) {
    const VectorField u = testutil::random_solenoidal(n, 10 * seed);
    for (Parity beta : all_parities()) {
      const auto parts = decompose_matched(u, beta);
      VectorField sum(n);
      for (const auto& p : parts) sum += p;
      EXPECT_LE(rel_diff(sum, u), 1e-13);
      for (Parity alpha : all_parities()) {
        const VectorField& p = parts[alpha.mask()];
        EXPECT_LE(l2_norm(divergence(p)) / l2_norm(u), 1e-11);
        const auto t = measure_tuple(p);
        ASSERT_TRUE(t.has_value());
        EXPECT_TRUE(tuple_consistent(*t, matched_part_tuple(alpha, beta))) << to_string(*t);
      }
      for (Parity a : all_parities())
        for (Parity b : all_parities())
          EXPECT_TRUE(matched_check(matched_part_tuple(a, beta), matched_part_tuple(b, beta)));
    }
  }
}

TEST(DecomposeMatched, RejectsDivergentInput) {
  const int n = 16;
  const VectorField v(sample(n, [](double x1, double, double) { return std::sin(x1); }), Grid3(n), Grid3(n));
  EXPECT_THROW(decompose_matched(v, Parity{}), NotSolenoidal);
}
