#include "mz/scalars.hpp"

#include <gtest/gtest.h>

#include "mz/testing.hpp"
#include "test_support.hpp"

using mz::PAdicValue;
using mz::Rational;
using mz::Zp;
using mz::test::q;

namespace {

Rational bigRational(mz::testing::Rng& rng) {
  mpz_class num = rng.range(-1'000'000'000, 1'000'000'000);
  mpz_class den = rng.range(1, 1'000'000'000);
  num *= rng.range(1, 1'000'000'000);
  den *= rng.range(1, 1'000'000'000);
  return Rational(mpq_class(num, den));
}

}  // namespace

TEST(Rational, ParsesAndPrintsCanonically) {
  EXPECT_EQ(q("6/4").toString(), "3/2");
  EXPECT_EQ(q(" -1/2 ").toString(), "-1/2");
  EXPECT_EQ(q("+7").toString(), "7");
  EXPECT_EQ(q("4/2").toString(), "2");
  EXPECT_EQ(q("0/5").toString(), "0");
  EXPECT_TRUE(q("4/2").isInteger());
  EXPECT_EQ(q("-3/9").denominator(), 3);
}

TEST(Rational, RejectsMalformedLiterals) {
  for (const char* bad : {"", "  ", "1/0", "a", "1/", "/2", "1/-2", "--1", "1.5", "1/2/3"}) {
    EXPECT_THROW(q(bad), mz::DomainError) << bad;
  }
  EXPECT_THROW(Rational(1, 0), mz::DomainError);
  EXPECT_THROW(q("1") / Rational(0), mz::DomainError);
}

TEST(Rational, OrderingAndSign) {
  EXPECT_LT(q("-1/2"), q("1/3"));
  EXPECT_GT(q("7/3"), q("2"));
  EXPECT_EQ(q("-2/3").sign(), -1);
  EXPECT_EQ(Rational(0).sign(), 0);
}

TEST(Rational, ArithmeticIsExactOnLargeDenominators) {
  mz::testing::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    Rational a = bigRational(rng);
    Rational b = bigRational(rng);
    EXPECT_EQ((a + b) - b, a);
    if (!b.isZero()) {
      EXPECT_EQ((a * b) / b, a);
    }
  }
}

TEST(Primality, SmallAndLarge) {
  EXPECT_FALSE(mz::isPrime(0));
  EXPECT_FALSE(mz::isPrime(1));
  EXPECT_TRUE(mz::isPrime(2));
  EXPECT_TRUE(mz::isPrime(999'983));
  EXPECT_FALSE(mz::isPrime(1'000'000));
  EXPECT_TRUE(mz::isPrime(1'000'003));
  EXPECT_FALSE(mz::isPrime(1'000'003ULL * 1'000'033ULL));
  EXPECT_TRUE(mz::isPrime(18'446'744'073'709'551'557ULL));  // largest 64-bit prime
  EXPECT_FALSE(mz::isPrime(3'215'031'751ULL));              // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(Primality, AgreesWithSieveBelowTwoMillion) {
  const std::size_t n = 2'000'000;
  std::vector<bool> composite(n, false);
  for (std::size_t i = 2; i * i < n; ++i) {
    if (composite[i]) continue;
    for (std::size_t j = i * i; j < n; j += i) composite[j] = true;
  }
  for (std::size_t i = 2; i < n; i += 7) ASSERT_EQ(mz::isPrime(i), !composite[i]) << i;
}

TEST(Zp, FieldArithmetic) {
  using F7 = Zp<7>;
  EXPECT_EQ(F7(-1), F7(6));
  EXPECT_EQ(F7(3) * F7(5), F7(1));
  EXPECT_EQ(F7(3).inverse(), F7(5));
  EXPECT_EQ(F7(2) - F7(5), F7(4));
  EXPECT_EQ(F7(3) / F7(3), F7(1));
  EXPECT_TRUE(F7(14).isZero());
  for (int a = 1; a < 7; ++a) EXPECT_EQ(F7(a) * F7(a).inverse(), F7(1));
  static_assert(mz::characteristic_v<Zp<5>> == 5);
  static_assert(mz::characteristic_v<Rational> == 0);
  static_assert(mz::CharZeroField<Rational>);
  static_assert(!mz::CharZeroField<Zp<3>>);
}

TEST(PAdicValuation, Examples) {
  EXPECT_EQ(mz::padicValuation(Rational(12), 2), PAdicValue(2));
  EXPECT_EQ(mz::padicValuation(q("5/3"), 5), PAdicValue(1));
  EXPECT_EQ(mz::padicValuation(q("5/3"), 5).absoluteValue(5), q("1/5"));
  EXPECT_EQ(mz::padicValuation(q("5/3"), 3), PAdicValue(-1));
  EXPECT_TRUE(mz::padicValuation(Rational(0), 7).isInfinite());
  EXPECT_EQ(mz::padicValuation(Rational(0), 7).toString(), "inf");
  EXPECT_TRUE(mz::padicValuation(Rational(0), 7).absoluteValue(7).isZero());
  // 1/(i+1) is a p-adic unit for 1 <= i+1 < p
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    for (long k = 1; k < static_cast<long>(p); ++k) EXPECT_EQ(mz::padicValuation(Rational(1, k), p), PAdicValue(0));
  }
}

TEST(PAdicValuation, RejectsNonPrime) {
  EXPECT_THROW(mz::padicValuation(Rational(4), 4), mz::DomainError);
  EXPECT_THROW(mz::padicValuation(Rational(4), 1), mz::DomainError);
}

TEST(PAdicValuation, InfinityOrdersAboveEverything) {
  EXPECT_GT(PAdicValue::infinity(), PAdicValue(1'000'000));
  EXPECT_TRUE((PAdicValue::infinity() + PAdicValue(3)).isInfinite());
}

TEST(PAdicValuation, MultiplicativeAndUltrametric) {
  mz::testing::Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    Rational x(rng.range(-500, 500), rng.range(1, 500));
    Rational y(rng.range(-500, 500), rng.range(1, 500));
    for (std::uint64_t p : {2, 3, 5}) {
      auto vx = mz::padicValuation(x, p);
      auto vy = mz::padicValuation(y, p);
      EXPECT_EQ(mz::padicValuation(x * y, p), vx + vy);
      auto vs = mz::padicValuation(x + y, p);
      auto lo = std::min(vx, vy);
      EXPECT_GE(vs, lo);
      if (vx != vy) {
        EXPECT_EQ(vs, lo);
      }
    }
  }
}
