#include <gtest/gtest.h>

#include <random>

#include "hecke01/laurent.hpp"

using hecke01::LaurentPoly;

namespace {

LaurentPoly v(int e) { return LaurentPoly::power(e); }

// Coefficient lists compared directly against a schoolbook convolution.
std::map<int, long long> convolve(const std::map<int, long long>& a, const std::map<int, long long>& b) {
  std::map<int, long long> out;
  for (auto [ea, ca] : a)
    for (auto [eb, cb] : b) out[ea + eb] += ca * cb;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

TEST(Laurent, ZeroAbsorbs) { EXPECT_TRUE(((v(1) + v(-1)) * LaurentPoly()).is_zero()); }

TEST(Laurent, InverseMonomials) { EXPECT_EQ(v(1) * v(-1), LaurentPoly(1)); }

TEST(Laurent, SquareOfOnePlusV) {
  LaurentPoly p = (LaurentPoly(1) + v(1)) * (LaurentPoly(1) + v(1));
  EXPECT_EQ(p, LaurentPoly(1) + LaurentPoly::monomial(1, 2) + v(2));
}

TEST(Laurent, BarOfV) { EXPECT_EQ(v(1).bar(), v(-1)); }

TEST(Laurent, BarFixesConstants) { EXPECT_EQ(LaurentPoly(1).bar(), LaurentPoly(1)); }

TEST(Laurent, BarNegatesExponents) {
  LaurentPoly p = v(2) - LaurentPoly(3) + v(-1);
  EXPECT_EQ(p.bar(), v(-2) - LaurentPoly(3) + v(1));
}

TEST(Laurent, CancellationLeavesNoZeroTerms) {
  LaurentPoly p = v(3) + v(1);
  p -= v(3);
  EXPECT_EQ(p.size(), 1u);
  EXPECT_EQ(p.coeff(3), 0);
  EXPECT_EQ(p, v(1));
}

TEST(Laurent, PositivePart) {
  EXPECT_TRUE(LaurentPoly().in_positive_part());
  EXPECT_TRUE((v(1) + v(4)).in_positive_part());
  EXPECT_FALSE((v(0) + v(4)).in_positive_part());
  EXPECT_FALSE(v(-1).in_positive_part());
}

TEST(Laurent, BarInvariantCompletion) {
  // keep the constant, mirror the negative powers
  LaurentPoly p = LaurentPoly::monomial(-2, 3) + LaurentPoly(5) + v(1);
  LaurentPoly b = hecke01::bar_invariant_completion(p);
  EXPECT_EQ(b, LaurentPoly::monomial(-2, 3) + LaurentPoly(5) + LaurentPoly::monomial(2, 3));
  EXPECT_TRUE(b.is_bar_invariant());
  EXPECT_TRUE((p - b).in_positive_part());
}

TEST(Laurent, ToString) {
  EXPECT_EQ(LaurentPoly().to_string(), "0");
  EXPECT_EQ((v(-1) + LaurentPoly(2) + v(3)).to_string(), "v^-1 + 2 + v^3");
}

TEST(Laurent, RandomProductsMatchConvolution) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> exp(-5, 5), coeff(-4, 4), n(0, 4);
  for (int trial = 0; trial < 300; ++trial) {
    std::map<int, long long> a, b;
    LaurentPoly pa, pb;
    for (int i = n(rng); i > 0; --i) {
      int e = exp(rng), c = coeff(rng);
      a[e] += c;
      pa.add_term(e, c);
    }
    for (int i = n(rng); i > 0; --i) {
      int e = exp(rng), c = coeff(rng);
      b[e] += c;
      pb.add_term(e, c);
    }
    std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(b, [](const auto& kv) { return kv.second == 0; });
    std::map<int, long long> expected = convolve(a, b);
    LaurentPoly got = pa * pb;
    ASSERT_EQ(got.size(), expected.size());
    for (auto [e, c] : expected) ASSERT_EQ(got.coeff(e), c);
    ASSERT_EQ((pa * pb).bar(), pa.bar() * pb.bar());
  }
}
