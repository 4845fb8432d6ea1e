#include "mz/functionals.hpp"

#include <gtest/gtest.h>

#include "mz/quotient.hpp"
#include "mz/testing.hpp"
#include "test_support.hpp"

using mz::FunctionalNF;
using mz::Poly;
using mz::Rational;
using mz::test::poly;
using mz::test::q;
using mz::test::roots;
using PolyQ = Poly<Rational>;
using FunctionalQ = FunctionalNF<Rational>;

namespace {

/// (prod (t-lambda)^e_lambda) lies in every kernel iff L(t^j h) = 0 for all
/// L and all j below the total multiplicity.
bool idealInsideKernels(const std::vector<FunctionalQ>& Ls, const PolyQ& h, std::size_t N) {
  for (const auto& L : Ls) {
    for (std::size_t j = 0; j < N; ++j) {
      if (!mz::evaluate(L, h.shifted(j)).isZero()) return false;
    }
  }
  return true;
}

/// Brute force over all exponent vectors e <= m: the largest ideal is the one
/// with the least total degree among those inside the kernels.
std::vector<std::size_t> bruteForceExponents(const std::vector<FunctionalQ>& Ls) {
  const auto& rd = Ls.front().rootData();
  const std::size_t N = rd.totalMultiplicity();
  std::vector<std::size_t> e(rd.size(), 0), best;
  std::size_t bestDegree = N + 1;
  while (true) {
    PolyQ h = poly({"1"});
    std::size_t deg = 0;
    for (std::size_t i = 0; i < rd.size(); ++i) {
      h = h * PolyQ::linear(rd[i].value).pow(e[i]);
      deg += e[i];
    }
    if (deg < bestDegree && idealInsideKernels(Ls, h, N)) {
      bestDegree = deg;
      best = e;
    }
    std::size_t i = 0;
    while (i < e.size() && ++e[i] > rd[i].multiplicity) e[i++] = 0;
    if (i == e.size()) break;
  }
  return best;
}

}  // namespace

TEST(FunctionalNF, ValidatesDegrees) {
  auto rd = roots({{"1", 2}});
  EXPECT_NO_THROW(FunctionalQ(rd, {poly({"1", "1"})}));
  EXPECT_THROW(FunctionalQ(rd, {poly({"1", "1", "1"})}), mz::DomainError);
  EXPECT_THROW(FunctionalQ(rd, {}), mz::DomainError);
}

TEST(Evaluate, Examples) {
  FunctionalQ s1(roots({{"1", 1}}), {poly({"1"})});
  EXPECT_EQ(mz::evaluate(s1, poly({"1", "0", "1"})), Rational(2));
  FunctionalQ d0(roots({{"0", 2}}), {poly({"0", "1"})});
  EXPECT_EQ(mz::evaluate(d0, poly({"0", "3", "5"})), Rational(3));
  EXPECT_EQ(d0.p0(), poly({"0", "1"}));
  EXPECT_TRUE(s1.p0().isZero());
}

TEST(Evaluate, ValueAtCrtIdempotentIsConstantTerm) {
  mz::testing::Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    auto rd = mz::testing::randomRoots(rng, 3, 3);
    auto L = mz::testing::randomFunctional(rng, rd);
    auto ring = mz::QuotientRing<Rational>::create(rd);
    auto g = mz::crtIdempotents(*ring);
    for (std::size_t k = 0; k < rd.size(); ++k) {
      EXPECT_EQ(mz::evaluate(L, g[k].representative()), L.operatorAt(k).coeff(0));
    }
  }
}

TEST(Evaluate, KillsTheIdealOfTheModulus) {
  mz::testing::Rng rng(13);
  for (int i = 0; i < 60; ++i) {
    auto rd = mz::testing::randomRoots(rng, 3, 3);
    auto L = mz::testing::randomFunctional(rng, rd);
    PolyQ f = rd.modulus();
    for (std::size_t deg = 0; deg <= 20; deg += 4) {
      EXPECT_TRUE(mz::evaluate(L, mz::testing::randomPoly(rng, deg) * f).isZero());
    }
  }
}

TEST(Moments, Examples) {
  FunctionalQ s2d(roots({{"2", 2}}), {poly({"0", "1"})});
  auto m = mz::toMoments(s2d, 4);
  EXPECT_EQ(m, (std::vector<Rational>{0, 2, 8, 24}));

  FunctionalQ d0(roots({{"0", 2}}), {poly({"0", "1"})});
  EXPECT_EQ(mz::toMoments(d0, 4), (std::vector<Rational>{0, 1, 0, 0}));
  EXPECT_THROW(mz::toMoments(d0, 0), mz::DomainError);
}

TEST(Moments, ToMomentsMatchesDirectEvaluation) {
  mz::testing::Rng rng(14);
  for (int i = 0; i < 50; ++i) {
    auto rd = mz::testing::randomRoots(rng, 3, 3);
    auto L = mz::testing::randomFunctional(rng, rd);
    auto m = mz::toMoments(L, 8);
    for (std::size_t n = 0; n < 8; ++n) EXPECT_EQ(m[n], mz::evaluate(L, PolyQ::monomial(Rational(1), n)));
  }
}

TEST(FromMoments, Examples) {
  auto pm = roots({{"1", 1}, {"-1", 1}});
  auto L = mz::fromMoments(mz::MomentSeq<Rational>{{2, 0}, poly({"-1", "0", "1"})}, pm);
  EXPECT_EQ(L.operatorAt(0), poly({"1"}));
  EXPECT_EQ(L.operatorAt(1), poly({"1"}));

  auto z = roots({{"0", 2}});
  auto D = mz::fromMoments(mz::MomentSeq<Rational>{{0, 1}, poly({"0", "0", "1"})}, z);
  EXPECT_EQ(D.p0(), poly({"0", "1"}));

  auto single = roots({{"5/2", 1}});
  auto S = mz::fromMoments(mz::MomentSeq<Rational>{{1}, PolyQ::linear(q("5/2"))}, single);
  EXPECT_EQ(S.operatorAt(0), poly({"1"}));
}

TEST(FromMoments, Errors) {
  auto pm = roots({{"1", 1}, {"-1", 1}});
  EXPECT_THROW(mz::fromMoments(mz::MomentSeq<Rational>{{2}, poly({"-1", "0", "1"})}, pm), mz::DomainError);
  EXPECT_THROW(mz::fromMoments(mz::MomentSeq<Rational>{{2, 0}, poly({"-4", "0", "1"})}, pm), mz::DomainError);
  EXPECT_THROW(mz::fromMoments(mz::MomentSeq<Rational>{{}, poly({"3"})}, pm), mz::DomainError);
}

TEST(FromMoments, InvertsToMoments) {
  mz::testing::Rng rng(15);
  for (int i = 0; i < 100; ++i) {
    auto rd = mz::testing::randomRoots(rng, 3, 3);
    auto L = mz::testing::randomFunctional(rng, rd);
    auto m = mz::toMoments(L, rd.totalMultiplicity());
    EXPECT_EQ(mz::fromMoments(mz::MomentSeq<Rational>{m, rd.modulus() * Rational(3)}, rd), L);
  }
}

TEST(LargestIdeal, Examples) {
  FunctionalQ d0(roots({{"0", 5}}), {poly({"0", "1"})});
  EXPECT_EQ(mz::largestIdealExponents<Rational>({d0}), std::vector<std::size_t>{2});

  FunctionalQ s1(roots({{"1", 2}}), {poly({"1"})});
  EXPECT_EQ(mz::largestIdealExponents<Rational>({s1}), std::vector<std::size_t>{1});

  FunctionalQ s1d(roots({{"1", 2}}), {poly({"0", "1"})});
  EXPECT_EQ(mz::largestIdealExponents<Rational>({s1, s1d}), std::vector<std::size_t>{2});

  EXPECT_THROW(mz::largestIdealExponents<Rational>({}), mz::DomainError);
  FunctionalQ other(roots({{"2", 1}}), {poly({"1"})});
  EXPECT_THROW(mz::largestIdealExponents<Rational>({s1, other}), mz::DomainError);
}

TEST(LargestIdeal, MatchesBruteForceSearch) {
  mz::testing::Rng rng(16);
  for (int i = 0; i < 60; ++i) {
    auto rd = mz::testing::randomRoots(rng, 3, 3);
    std::vector<FunctionalQ> Ls;
    const auto d = static_cast<std::size_t>(rng.range(1, 2));
    for (std::size_t k = 0; k < d; ++k) Ls.push_back(mz::testing::randomFunctional(rng, rd));
    EXPECT_EQ(mz::largestIdealExponents(Ls), bruteForceExponents(Ls));
  }
}
