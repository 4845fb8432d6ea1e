#include "mz/io.hpp"

#include <gtest/gtest.h>

#include "mz/testing.hpp"
#include "test_support.hpp"

using mz::io::json;
using mz::test::poly;
using mz::test::q;

TEST(Json, RationalsAndPolynomials) {
  EXPECT_EQ(mz::io::rationalFromJson(json(" -1/2")), q("-1/2"));
  EXPECT_EQ(mz::io::rationalFromJson(json(7)), q("7"));
  EXPECT_THROW(mz::io::rationalFromJson(json(1.5)), mz::DomainError);
  EXPECT_EQ(mz::io::polyFromJson(json::parse(R"([" -1/2", "1"])")), poly({"-1/2", "1"}));
  EXPECT_EQ(mz::io::toJson(poly({"0", "3/6"})), json::parse(R"(["0", "1/2"])"));
  EXPECT_THROW(mz::io::polyFromJson(json::parse("{}")), mz::DomainError);
}

TEST(Json, SpecRoundTrip) {
  const json in = json::parse(R"({
    "roots": [["0", 2], ["1", 1], ["-1/2", 2]],
    "functionals": [
      {"P0": ["1", "2"], "parts": {"1": ["3"]}},
      {"parts": {"-1/2": ["0", "1"]}}
    ]})");
  auto spec = mz::io::specFromJson(in);
  ASSERT_EQ(spec.functionals.size(), 2U);
  EXPECT_EQ(spec.functionals[0].p0(), poly({"1", "2"}));
  EXPECT_EQ(spec.functionals[1].operatorAt(2), poly({"0", "1"}));
  auto again = mz::io::specFromJson(mz::io::toJson(spec));
  EXPECT_EQ(again.functionals, spec.functionals);
}

TEST(Json, SpecValidation) {
  EXPECT_THROW(mz::io::specFromJson(json::parse(R"({"roots": []})")), mz::DomainError);
  EXPECT_THROW(mz::io::specFromJson(json::parse(R"({"roots": [["1",1]], "functionals": []})")), mz::DomainError);
  EXPECT_THROW(mz::io::specFromJson(json::parse(R"({"roots": [["1",1]], "functionals": [{"parts": {"2": ["1"]}}]})")),
               mz::DomainError);
  EXPECT_THROW(mz::io::specFromJson(json::parse(R"({"roots": [["1",1]], "functionals": [{"P0": ["1"]}]})")),
               mz::DomainError);
  EXPECT_THROW(mz::io::specFromJson(json::parse(R"({"roots": [["0",1]], "functionals": [{"parts": {"0": ["1"]}}]})")),
               mz::DomainError);
  EXPECT_THROW(mz::io::specFromJson(json::parse(R"({"roots": [["1",-1]], "functionals": [{}]})")), mz::DomainError);
  EXPECT_THROW(mz::io::specFromJson(json::parse(R"({"roots": [["1",1]], "functionals": [{"parts": {"1": ["1","1"]}}]})")),
               mz::DomainError);
}

TEST(Json, VerdictForExampleC) {
  auto spec = mz::normalize(mz::io::specFromJson(json::parse(
      R"({"roots": [["1",1],["-1",1]], "functionals": [{"parts": {"1": ["1"], "-1": ["-1"]}}]})")));
  auto out = mz::io::toJson(mz::decideMZ(spec), spec.rootData());
  EXPECT_EQ(out["isMZ"], false);
  EXPECT_EQ(out["witnessSubset"], json::parse(R"(["1", "-1"])"));
  EXPECT_EQ(out["witnessIdempotent"], json::parse(R"(["1"])"));
  EXPECT_EQ(out["witnessMultiplier"], json::parse(R"(["0", "1"])"));
}

TEST(Json, LaurentMatrixAndMultivariate) {
  auto g = mz::io::laurentFromJson(json::parse(R"({"-2": "1/3", "4": 2})"));
  EXPECT_EQ(g.coeff(-2), q("1/3"));
  EXPECT_EQ(mz::io::toJson(g), json::parse(R"({"-2": "1/3", "4": "2"})"));
  EXPECT_THROW(mz::io::laurentFromJson(json::parse(R"({"x": "1"})")), mz::DomainError);

  auto m = mz::io::matrixFromJson(json::parse(R"([["1","2"],["3","4"]])"));
  EXPECT_EQ(m(1, 0), q("3"));
  EXPECT_EQ(mz::io::toJson(m), json::parse(R"([["1","2"],["3","4"]])"));
  EXPECT_THROW(mz::io::matrixFromJson(json::parse(R"([["1","2"]])")), mz::DomainError);

  auto p = mz::io::multiPolyFromJson(json::parse(R"({"n": 2, "terms": [{"exp": [1, 1], "c": "1/2"}]})"));
  EXPECT_EQ(p.vars(), 2U);
  EXPECT_EQ(mz::io::multiPolyFromJson(mz::io::toJson(p)), p);
  EXPECT_THROW(mz::io::multiPolyFromJson(json::parse(R"({"n": 2, "terms": [{"exp": [1], "c": "1"}]})")),
               mz::DomainError);
}

TEST(Json, ZXPolyRoundTrip) {
  mz::testing::Rng rng(71);
  for (int i = 0; i < 20; ++i) {
    auto f = mz::testing::randomZXPoly<5>(rng, 2, 3);
    EXPECT_EQ(mz::io::zxPolyFromJson<5>(mz::io::toJson(f), 2), f);
  }
  auto neg = mz::io::zxPolyFromJson<3>(json::parse(R"([{"zeta": [1], "x": [0], "c": -1}])"), 1);
  EXPECT_EQ(neg, mz::ZXPoly<3>::zeta(1, 0) * mz::Zp<3>(2));
  EXPECT_THROW(mz::io::zxPolyFromJson<3>(json::parse(R"([{"zeta": [1, 0], "x": [0], "c": 1}])"), 1), mz::DomainError);
  EXPECT_THROW(mz::io::zxPolyFromJson<3>(json::parse(R"([{"zeta": [1], "x": [0], "c": "1"}])"), 1), mz::DomainError);
}

TEST(Json, CertificateFields) {
  auto cert = *mz::certifyUnitInterval(poly({"-1/2", "1"}), 1, 10);
  auto out = mz::io::toJson(cert);
  EXPECT_EQ(out["p"], 3);
  EXPECT_EQ(out["m"], 2);
  EXPECT_EQ(out["valuation"], -1);
  EXPECT_EQ(out["value"], "1/12");
  EXPECT_EQ(out["rule"], "unit");
}
