#include <gtest/gtest.h>

#include <stdexcept>

#include "parityns/selftest.hpp"
#include "parityns/symtype.hpp"

using namespace parityns;

namespace {

SymLabel R(const char* s) { return parse_label(s); }

}  // namespace

TEST(MReduce, Examples) {
  EXPECT_EQ(m_reduce(MultiIndex{2, 3, 4}), Parity(0, 1, 0));
  EXPECT_EQ(m_reduce(MultiIndex{0, 0, 0}), Parity(0, 0, 0));
  EXPECT_EQ(m_reduce(MultiIndex{1, 0, 1}), Parity(1, 0, 1));
  EXPECT_EQ(m_reduce(MultiIndex{-1, -2, 5}), Parity(1, 0, 1));
}

TEST(SumLabel, Examples) {
  EXPECT_EQ(sum_label(R("100"), R("100")), R("100"));
  EXPECT_EQ(sum_label(R("100"), R("000z")), R("100"));
  EXPECT_FALSE(sum_label(R("100"), R("010")).has_value());
  EXPECT_EQ(sum_label(R("000c"), R("000c")), R("000c"));
  EXPECT_EQ(sum_label(R("000c"), R("000")), R("000"));
  EXPECT_FALSE(sum_label(R("000c"), R("100")).has_value());
}

TEST(ProductLabel, RealExamples) {
  EXPECT_EQ(product_label(R("100"), R("110")), R("010"));
  EXPECT_EQ(convolution_label(R("010"), R("000")), R("010"));
  EXPECT_EQ(convolution_label(R("111"), R("111")), R("000"));
  EXPECT_EQ(product_label(R("000c"), R("101")), R("101"));
  EXPECT_EQ(product_label(R("000z"), R("101")), R("000z"));
}

TEST(ProductLabel, MatchedComplexPairFollowsShiftRule) {
  // Components l, l' of two generic kinds with alpha0 = beta0 = 001 and
  // alpha0' = beta0' = 000 are matched; the real part is m(e_l + e_l' + alpha0 + alpha0').
  const Parity a0(0, 0, 1), a1{};
  for (int l = 0; l < 3; ++l)
    for (int lp = 0; lp < 3; ++lp) {
      const auto f = SymLabel::complex(Parity::unit(l) + a0, Parity::unit(l) + a0);
      const auto g = SymLabel::complex(Parity::unit(lp) + a1, Parity::unit(lp) + a1);
      const auto p = product_label(f, g);
      ASSERT_TRUE(p.has_value());
      EXPECT_EQ(p->re(), PartLabel::of(Parity::unit(l) + Parity::unit(lp) + a0 + a1));
    }
}

TEST(ProductLabel, UnmatchedComplexPair) {
  // m(re + re') = 100 but m(im + im') = 000.
  EXPECT_FALSE(product_label(R("100+i000"), R("000+i000")).has_value());
  EXPECT_FALSE(product_label(R("101+i101"), R("100+i101")).has_value());
}

TEST(ProductLabel, ZeroPartCollapsesCondition) {
  // The imaginary part of the first factor vanishes, so only one term survives in each part.
  const auto p = product_label(R("100+i000z"), R("010+i001"));
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(*p, R("110+i101"));
}

TEST(DerivativeLabel, Examples) {
  EXPECT_EQ(derivative_label(R("000+i000"), {1, 0, 0}), R("100+i100"));
  EXPECT_EQ(derivative_label(R("100"), {1, 0, 0}), R("000"));
  EXPECT_EQ(derivative_label(R("110"), {0, 2, 0}), R("110"));
  EXPECT_EQ(derivative_label(R("000c"), {0, 0, 1}), R("000z"));
  EXPECT_EQ(derivative_label(R("000c"), {0, 0, 0}), R("000c"));
}

TEST(RadialKernel, Identity) {
  EXPECT_EQ(radial_kernel_label(R("100+i011")), R("100+i011"));
  EXPECT_EQ(radial_kernel_label(R("000")), R("000"));
  for (const auto& a : all_labels()) EXPECT_EQ(radial_kernel_label(a), a);
}

TEST(MatchedCheck, Examples) {
  const Parity a0(1, 0, 0), b0(0, 1, 1), a1(0, 1, 0), b1(1, 0, 1);  // a0 + a1 = b0 + b1 = 110
  EXPECT_TRUE(matched_check(solenoidal_tuple(a0, b0), solenoidal_tuple(a1, b1)));
  for (Parity a : all_parities())
    for (Parity b : all_parities()) EXPECT_TRUE(matched_check(solenoidal_tuple(a, b), solenoidal_tuple(a, b)));
  // Kinds of the unmatched pair: u has alpha0 = beta0 = 001, v has alpha0' = 000, beta0' = 001.
  const Parity e3(0, 0, 1);
  EXPECT_FALSE(matched_check(solenoidal_tuple(e3, e3), solenoidal_tuple(Parity{}, e3)));
}

TEST(BilinearLabel, RealDiagonal) {
  for (Parity a : all_parities()) {
    const auto b = bilinear_B_label(solenoidal_tuple(a), solenoidal_tuple(a));
    ASSERT_TRUE(b.has_value());
    EXPECT_EQ(*b, parse_tuple("(100,010,001)"));
  }
}

TEST(BilinearLabel, ComplexDiagonal) {
  for (Parity a : all_parities())
    for (Parity b : all_parities()) {
      const auto lbl = bilinear_B_label(solenoidal_tuple(a, b), solenoidal_tuple(a, b));
      ASSERT_TRUE(lbl.has_value());
      for (int l = 0; l < 3; ++l) EXPECT_EQ((*lbl)[l], SymLabel::complex(Parity::unit(l), Parity::unit(l) + a + b));
    }
}

TEST(BilinearLabel, ClosedFormOracleExhaustive) {
  // Independent oracle: the closed form, evaluated bit by bit.
  int checked = 0;
  for (unsigned a0 = 0; a0 < 8; ++a0)
    for (unsigned b0 = 0; b0 < 8; ++b0)
      for (unsigned a1 = 0; a1 < 8; ++a1)
        for (unsigned b1 = 0; b1 < 8; ++b1) {
          const TypeTuple u = solenoidal_tuple(Parity::from_mask(a0), Parity::from_mask(b0));
          const TypeTuple v = solenoidal_tuple(Parity::from_mask(a1), Parity::from_mask(b1));
          const bool matched = (a0 ^ a1) == (b0 ^ b1);
          EXPECT_EQ(matched_check(u, v), matched_check(v, u));
          const auto lbl = bilinear_B_label(u, v);
          ASSERT_EQ(lbl.has_value(), matched);
          if (!matched) continue;
          for (unsigned l = 0; l < 3; ++l) {
            const unsigned el = 1u << l;
            EXPECT_EQ((*lbl)[static_cast<int>(l)].re().parity.mask(), el ^ a0 ^ a1);
            EXPECT_EQ((*lbl)[static_cast<int>(l)].im().parity.mask(), el ^ a1 ^ b0);
          }
          ++checked;
        }
  EXPECT_EQ(checked, 64 * 64 / 8);
}

TEST(TextForm, RoundTripAndErrors) {
  EXPECT_EQ(to_string(R("000c+i010")), "000c+i010");
  EXPECT_EQ(to_string(parse_tuple("(100,010,001)")), "(100,010,001)");
  EXPECT_EQ(parse_tuple("100,010,001"), parse_tuple("(100,010,001)"));
  EXPECT_THROW(parse_label("10"), std::invalid_argument);
  EXPECT_THROW(parse_label("102"), std::invalid_argument);
  EXPECT_THROW(parse_label("100c"), std::invalid_argument);
  EXPECT_THROW(parse_label("000x"), std::invalid_argument);
  EXPECT_THROW(parse_tuple("(100,010)"), std::invalid_argument);
  EXPECT_THROW(parse_tuple("(100,010,001,000)"), std::invalid_argument);
}

TEST(Selftest, AllChecksPass) {
  for (const auto& r : run_symtype_selftest()) {
    EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
    EXPECT_GT(r.cases, 0u) << r.name;
  }
}
