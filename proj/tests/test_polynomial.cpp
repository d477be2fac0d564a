#include <gtest/gtest.h>

#include "bpenta/polynomial.hpp"
#include "test_support.hpp"

namespace bpenta {
namespace {

using testing::Qs;

Polynomial P(std::initializer_list<long> ascending) { return Polynomial(Qs(ascending)); }

TEST(PolynomialTest, ZeroHasNoCoefficients) {
  EXPECT_TRUE(Polynomial().is_zero());
  EXPECT_EQ(Polynomial().degree(), -1);
  EXPECT_TRUE(P({0, 0, 0}).is_zero());
  EXPECT_EQ(P({1, 2, 0, 0}).degree(), 1);
}

TEST(PolynomialTest, ArithmeticAndEvaluation) {
  const Polynomial a = P({-1, 0, 1});  // x^2 - 1
  const Polynomial b = P({1, 1});      // x + 1
  EXPECT_EQ(a * b, P({-1, -1, 1, 1}));
  EXPECT_EQ(a + b, P({0, 1, 1}));
  EXPECT_EQ(a - a, Polynomial());
  EXPECT_EQ(a.eval(BigRational(3)), BigRational(8));
  EXPECT_EQ(a.to_string(), "x^2 - 1");
}

TEST(PolynomialTest, DivmodReconstructsDividend) {
  oracle::SplitMix64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Polynomial a = testing::random_polynomial(rng, 6, 20);
    const Polynomial b = testing::random_nonzero_polynomial(rng, 4, 20);
    const auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
  EXPECT_THROW(divmod(P({1}), Polynomial()), Error);
}

TEST(PolyGcdTest, CommonLinearFactor) {
  EXPECT_EQ(poly_gcd(P({-1, 0, 1}), P({-1, 1})), P({-1, 1}));
}

TEST(PolyGcdTest, GcdWithZeroIsMonicInput) {
  const Polynomial p = P({4, 6, 2});
  EXPECT_EQ(poly_gcd(p, Polynomial()), p.monic());
  EXPECT_EQ(poly_gcd(Polynomial(), p), p.monic());
}

TEST(PolyGcdTest, BothZeroIsAnError) {
  try {
    (void)poly_gcd(Polynomial(), Polynomial());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BothZero);
  }
}

TEST(PolyGcdTest, CoprimeGivesOne) { EXPECT_EQ(poly_gcd(P({1, 1}), P({-1, 1})), P({1})); }

// Products of random factor lists sharing a planted factor: the gcd is
// divisible by the planted factor and divides both inputs.
TEST(PolyGcdTest, RecoversPlantedFactor) {
  oracle::SplitMix64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial planted = testing::random_nonzero_polynomial(rng, 4, 9);
    while (planted.degree() < 1) planted = testing::random_nonzero_polynomial(rng, 4, 9);
    const Polynomial p = planted * testing::random_nonzero_polynomial(rng, 4, 9);
    const Polynomial q = planted * testing::random_nonzero_polynomial(rng, 4, 9);
    const Polynomial g = poly_gcd(p, q);
    EXPECT_EQ(g.leading(), BigRational(1));
    EXPECT_TRUE(divmod(g, planted).second.is_zero());
    EXPECT_TRUE(divmod(p, g).second.is_zero());
    EXPECT_TRUE(divmod(q, g).second.is_zero());
  }
}

}  // namespace
}  // namespace bpenta
