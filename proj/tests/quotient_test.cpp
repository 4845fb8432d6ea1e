#include "mz/quotient.hpp"

#include <gtest/gtest.h>

#include <set>

#include "mz/testing.hpp"
#include "test_support.hpp"

using mz::Poly;
using mz::QuotientRing;
using mz::Rational;
using mz::test::poly;
using mz::test::q;
using mz::test::roots;
using PolyQ = Poly<Rational>;

namespace {

std::shared_ptr<const QuotientRing<Rational>> ring(const mz::RootData<Rational>& rd) {
  return QuotientRing<Rational>::create(rd);
}

/// Independent check of the CRT property: g - 1 divisible by (t-lambda)^m and
/// g divisible by every other primary factor.
bool isCrtIdempotentFor(const PolyQ& g, const mz::RootData<Rational>& rd, std::size_t k) {
  for (std::size_t j = 0; j < rd.size(); ++j) {
    PolyQ primary = PolyQ::linear(rd[j].value).pow(rd[j].multiplicity);
    PolyQ target = j == k ? g - poly({"1"}) : g;
    if (!mz::divides(primary, target)) return false;
  }
  return true;
}

}  // namespace

TEST(QuotientRing, ValidatesModulus) {
  auto rd = roots({{"1", 1}, {"2", 1}});
  EXPECT_NO_THROW(QuotientRing<Rational>::create(rd.modulus() * Rational(1), rd));
  EXPECT_THROW(QuotientRing<Rational>::create(poly({"1", "1"}), rd), mz::DomainError);
  auto r = ring(rd);
  EXPECT_EQ(r->dimension(), 2U);
  EXPECT_EQ(r->t().pow(2), r->element(poly({"-2", "3"})));
}

TEST(CrtIdempotents, Examples) {
  {
    auto r = ring(roots({{"0", 1}, {"1", 1}}));
    auto g = mz::crtIdempotents(*r);
    EXPECT_EQ(g[0].representative(), poly({"1", "-1"}));
    EXPECT_EQ(g[1].representative(), poly({"0", "1"}));
  }
  {
    auto r = ring(roots({{"2", 3}}));
    EXPECT_EQ(mz::crtIdempotents(*r)[0].representative(), poly({"1"}));
  }
  {
    auto r = ring(roots({{"0", 2}, {"1", 1}}));
    auto g = mz::crtIdempotents(*r);
    EXPECT_EQ(g[0].representative(), poly({"1", "0", "-1"}));
    EXPECT_EQ(g[1].representative(), poly({"0", "0", "1"}));
  }
  {
    auto r = ring(roots({{"1", 1}, {"-1", 1}}));
    auto g = mz::crtIdempotents(*r);
    EXPECT_EQ(g[0].representative(), poly({"1/2", "1/2"}));
    EXPECT_EQ(g[1].representative(), poly({"1/2", "-1/2"}));
    EXPECT_EQ(mz::evalAt(g[0].representative(), q("1")), Rational(1));
    EXPECT_EQ(mz::evalAt(g[0].representative(), q("-1")), Rational(0));
  }
}

TEST(CrtIdempotents, LawsOnRandomModuli) {
  mz::testing::Rng rng(2024);
  for (int i = 0; i < 100; ++i) {
    auto rd = mz::testing::randomRoots(rng, 4, 3);
    auto r = ring(rd);
    auto g = mz::crtIdempotents(*r);
    auto sum = r->zero();
    for (std::size_t a = 0; a < g.size(); ++a) {
      EXPECT_TRUE(isCrtIdempotentFor(g[a].representative(), rd, a));
      EXPECT_EQ(g[a] * g[a], g[a]);
      for (std::size_t b = 0; b < g.size(); ++b) {
        if (a != b) {
          EXPECT_TRUE((g[a] * g[b]).isZero());
        }
      }
      sum += g[a];
    }
    EXPECT_EQ(sum, r->one());
  }
}

TEST(AllIdempotents, ExamplesAndOrder) {
  auto r = ring(roots({{"0", 1}, {"1", 1}}));
  auto all = mz::allIdempotents(*r);
  ASSERT_EQ(all.size(), 4U);
  EXPECT_TRUE(all[0].subset.empty());
  EXPECT_TRUE(all[0].value.isZero());
  EXPECT_EQ(all[1].subset, std::vector<std::size_t>{0});
  EXPECT_EQ(all[1].value.representative(), poly({"1", "-1"}));
  EXPECT_EQ(all[2].value.representative(), poly({"0", "1"}));
  EXPECT_EQ(all[3].value, r->one());

  EXPECT_EQ(mz::allIdempotents(*ring(roots({{"2", 3}}))).size(), 2U);

  auto pm = mz::allIdempotents(*ring(roots({{"1", 1}, {"-1", 1}})));
  ASSERT_EQ(pm.size(), 4U);
  EXPECT_EQ(pm[1].value.representative(), poly({"1/2", "1/2"}));
  EXPECT_EQ(pm[2].value.representative(), poly({"1/2", "-1/2"}));
}

TEST(AllIdempotents, CountAndIdempotencyMatchBruteForce) {
  // Over a Q-split modulus an idempotent is 0 or 1 at each primary component,
  // so there are exactly 2^|roots| and they are pairwise distinct.
  mz::testing::Rng rng(7);
  for (int i = 0; i < 30; ++i) {
    auto rd = mz::testing::randomRoots(rng, 4, 2);
    auto all = mz::allIdempotents(*ring(rd));
    EXPECT_EQ(all.size(), std::size_t{1} << rd.size());
    std::set<std::string> seen;
    for (const auto& e : all) {
      EXPECT_TRUE(e.value.isIdempotent());
      seen.insert(e.value.representative().toString());
    }
    EXPECT_EQ(seen.size(), all.size());
  }
}

TEST(SubsetEnumeration, BySizeThenLexicographic) {
  std::vector<std::vector<std::size_t>> seen;
  mz::forEachSubsetBySize(3, [&](const std::vector<std::size_t>& s) {
    seen.push_back(s);
    return true;
  });
  const std::vector<std::vector<std::size_t>> expected = {{}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
  EXPECT_EQ(seen, expected);
  std::size_t visits = 0;
  mz::forEachSubsetBySize(5, [&](const std::vector<std::size_t>&) { return ++visits < 4; });
  EXPECT_EQ(visits, 4U);
}

TEST(IdempotentFromElement, Examples) {
  auto r = ring(roots({{"0", 1}, {"1", 1}}));
  auto lift = mz::idempotentFromElement(r->t(), poly({"0", "-1", "1"}), 1);
  EXPECT_EQ(lift.idempotent, r->t());
  EXPECT_EQ(lift.idempotent * lift.idempotent, lift.idempotent);

  auto nil = ring(roots({{"0", 3}}));
  auto a = nil->t();
  auto zero = mz::idempotentFromElement(a, PolyQ::monomial(Rational(1), 3), 1);
  EXPECT_TRUE(zero.idempotent.isZero());

  auto one = mz::idempotentFromElement(r->one(), poly({"-1", "1"}), 1);
  EXPECT_EQ(one.idempotent, r->one());
}

TEST(IdempotentFromElement, Errors) {
  auto r = ring(roots({{"0", 1}, {"1", 1}}));
  EXPECT_THROW(mz::idempotentFromElement(r->t(), PolyQ(), 1), mz::DomainError);
  EXPECT_THROW(mz::idempotentFromElement(r->t(), poly({"0", "-1", "1"}), 0), mz::DomainError);
  EXPECT_THROW(mz::idempotentFromElement(r->t(), poly({"-2", "1"}), 1), mz::DomainError);
}

TEST(IdempotentFromElement, LawsOnRandomElements) {
  mz::testing::Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    auto rd = mz::testing::randomRoots(rng, 3, 3);
    auto r = ring(rd);
    auto a = r->element(mz::testing::randomPoly(rng, r->dimension() - 1));
    // the modulus composed with a's representative annihilates nothing in
    // general; use the minimal-polynomial stand-in prod (t - a(lambda))^m
    PolyQ annihilator = poly({"1"});
    for (const auto& root : rd) {
      annihilator = annihilator * PolyQ::linear(mz::evalAt(a.representative(), root.value)).pow(root.multiplicity);
    }
    ASSERT_TRUE(mz::evalAtResidue(annihilator, a).isZero());
    const auto N = static_cast<std::size_t>(rng.range(1, 3));
    auto lift = mz::idempotentFromElement(a, annihilator, N);
    EXPECT_GE(lift.n, N);
    EXPECT_EQ(lift.idempotent * lift.idempotent, lift.idempotent);
    EXPECT_EQ(a.pow(lift.n) * lift.idempotent, a.pow(lift.n));
    EXPECT_EQ(mz::evalAtResidue(lift.polynomial, a), lift.idempotent);
    for (std::size_t j = 0; j < lift.n; ++j) EXPECT_TRUE(lift.polynomial.coeff(j).isZero());
  }
}

TEST(IdempotentFromElement, WorksOverPrimeFields) {
  using F5 = mz::Zp<5>;
  auto rd = mz::RootData<F5>({{F5(0), 1}, {F5(1), 2}});
  auto r = QuotientRing<F5>::create(rd);
  auto lift = mz::idempotentFromElement(r->t(), rd.modulus(), 2);
  EXPECT_EQ(lift.idempotent * lift.idempotent, lift.idempotent);
  EXPECT_EQ(r->t().pow(lift.n) * lift.idempotent, r->t().pow(lift.n));
}
