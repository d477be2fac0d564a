#include <gtest/gtest.h>

#include "bpenta/rational.hpp"
#include "bpenta/oracle.hpp"
#include "test_support.hpp"

namespace bpenta {
namespace {

using testing::Q;

TEST(BigRationalTest, ParsesIntegersDecimalsAndFractions) {
  EXPECT_EQ(Q("3"), BigRational(3));
  EXPECT_EQ(Q("-7"), BigRational(-7));
  EXPECT_EQ(Q("+2"), BigRational(2));
  EXPECT_EQ(Q("0.25"), BigRational(1) / BigRational(4));
  EXPECT_EQ(Q("-1.5"), BigRational(-3) / BigRational(2));
  EXPECT_EQ(Q(".5"), BigRational(1) / BigRational(2));
  EXPECT_EQ(Q("6/4"), BigRational(3) / BigRational(2));
  EXPECT_EQ(Q("-6/4").to_string(), "-3/2");
  EXPECT_EQ(Q("123456789012345678901234567890").to_string(), "123456789012345678901234567890");
}

TEST(BigRationalTest, RejectsMalformedLiterals) {
  for (const char* bad : {"", "-", "abc", "1/-2", ".", "1.2.3", "1e5", "x", "2/", "/3", "--1"}) {
    try {
      (void)BigRational::parse(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Parse) << bad;
    }
  }
}

TEST(BigRationalTest, ZeroDenominatorIsDivisionByZero) {
  try {
    (void)BigRational::parse("1/0");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
  }
  EXPECT_THROW((void)(BigRational(1) / BigRational(0)), Error);
}

TEST(BigRationalTest, CanonicalForm) {
  const BigRational r(mpz_class(6), mpz_class(-4));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  const BigRational zero(mpz_class(0), mpz_class(-17));
  EXPECT_EQ(zero.numerator(), 0);
  EXPECT_EQ(zero.denominator(), 1);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero.to_string(), "0");
}

TEST(BigRationalTest, AgreesWithIntegerArithmetic) {
  oracle::SplitMix64 rng(42);
  for (int trial = 0; trial < 2000; ++trial) {
    const long a = rng.in_range(1L << 30);
    const long b = rng.in_range(1L << 30);
    EXPECT_EQ(BigRational(a) + BigRational(b), BigRational(a + b));
    EXPECT_EQ(BigRational(a) - BigRational(b), BigRational(a - b));
    EXPECT_EQ(BigRational(a) * BigRational(b), BigRational(a * b));
    EXPECT_EQ(-BigRational(a), BigRational(-a));
    EXPECT_EQ(BigRational(a) < BigRational(b), a < b);
    if (b != 0) {
      EXPECT_EQ(BigRational(a * b) / BigRational(b), BigRational(a));
    }
  }
}

TEST(BigRationalTest, ReducedAfterEveryOperation) {
  oracle::SplitMix64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const BigRational a = testing::random_rational(rng, 50);
    const BigRational b = testing::random_rational(rng, 50);
    for (const BigRational& r : {a + b, a - b, a * b}) {
      mpz_class g;
      const mpz_class num = r.numerator();
      const mpz_class den = r.denominator();
      mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      EXPECT_EQ(g, 1);
      EXPECT_GT(den, 0);
    }
  }
}

}  // namespace
}  // namespace bpenta
