#pragma once

/**
 * @file selftest.hpp
 * @brief Seeded invariant checks across all modules, run by `mz selftest`.
 *
 * Each check draws its own instances from a generator seeded with the run
 * seed, so results are reproducible and independent of check order.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mz/certificates.hpp"
#include "mz/imagep.hpp"
#include "mz/mzdecide.hpp"
#include "mz/probes.hpp"
#include "mz/quotient.hpp"
#include "mz/testing.hpp"

namespace mz::selftest {

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string firstFailure;

  bool passed() const { return failures == 0; }
};

namespace detail {

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::string& what) {
    ++result_.cases;
    if (ok) return;
    if (result_.failures++ == 0) result_.firstFailure = what;
  }
  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

inline CheckResult decideAgainstOracle(std::uint64_t seed) {
  Recorder rec("decideMZ agrees with the idempotent oracle");
  testing::Rng rng(seed);
  for (int i = 0; i < 100; ++i) {
    auto spec = testing::randomNormalizedSpec(rng);
    auto verdict = decideMZ(spec);
    bool ok = verdict.isMZ == oracleDecideMZ(spec);
    if (ok && !verdict.isMZ) {
      // the witness must be re-checkable: L(g) = 0 and L(b g) != 0
      const auto f = spec.rootData().modulus();
      ok = allZero(evaluateAll(spec, *verdict.witnessIdempotent)) &&
           !allZero(evaluateAll(spec, (*verdict.witnessMultiplier * *verdict.witnessIdempotent) % f));
    }
    rec.expect(ok, "random spec #" + std::to_string(i));
  }
  return rec.take();
}

inline CheckResult idempotentLaws(std::uint64_t seed) {
  Recorder rec("CRT idempotents are orthogonal and sum to 1");
  testing::Rng rng(seed);
  for (int i = 0; i < 50; ++i) {
    auto ring = QuotientRing<Rational>::create(testing::randomRoots(rng, 4, 3));
    auto g = crtIdempotents(*ring);
    Residue<Rational> sum = ring->zero();
    bool ok = true;
    for (std::size_t a = 0; a < g.size(); ++a) {
      sum += g[a];
      ok = ok && g[a].isIdempotent();
      for (std::size_t b = a + 1; b < g.size(); ++b) ok = ok && (g[a] * g[b]).isZero();
    }
    rec.expect(ok && sum == ring->one(), "random modulus #" + std::to_string(i));
  }
  return rec.take();
}

inline CheckResult momentRoundTrip(std::uint64_t seed) {
  Recorder rec("fromMoments inverts toMoments");
  testing::Rng rng(seed);
  for (int i = 0; i < 50; ++i) {
    auto roots = testing::randomRoots(rng, 3, 3);
    auto L = testing::randomFunctional(rng, roots);
    auto moments = toMoments(L, roots.totalMultiplicity());
    rec.expect(fromMoments(MomentSeq<Rational>{moments, roots.modulus()}, roots) == L,
               "random functional #" + std::to_string(i));
  }
  return rec.take();
}

inline CheckResult certificatesVerify(std::uint64_t seed) {
  Recorder rec("p-adic certificates re-verify by exact expansion");
  testing::Rng rng(seed);
  for (int i = 0; i < 10; ++i) {
    auto f = testing::randomPoly(rng, 2);
    std::vector<Rational> c = f.coefficients();
    c.resize(3, Rational(0));
    c[2] = Rational(1);
    Poly<Rational> monic(c);
    auto cert = certifyUnitInterval(monic, 1, 200);
    rec.expect(cert && verifyCertificate(*cert, monic), "unit interval, f = " + monic.toString());
  }
  Poly<Rational> g({Rational(0), Rational(1), Rational(1)});
  auto cert = certifyExponential(g, 1, 50);
  rec.expect(cert && verifyCertificate(*cert, g), "exponential, f = t + t^2");
  return rec.take();
}

template <std::uint32_t P>
void imdRoundTrip(Recorder& rec, testing::Rng& rng, std::size_t pairs) {
  ZXPoly<P> b(pairs);
  for (std::size_t i = 0; i < pairs; ++i) b += applyD(i, testing::randomZXPoly<P>(rng, pairs, 3));
  auto decision = imDDecide(b);
  rec.expect(decision.isMember() && decision.certificate->certifies(b),
             "p = " + std::to_string(P) + ", b = " + b.toString());
}

inline CheckResult imdSoundness(std::uint64_t seed) {
  Recorder rec("ImD members are accepted with exact certificates");
  testing::Rng rng(seed);
  for (int i = 0; i < 40; ++i) {
    const auto pairs = static_cast<std::size_t>(rng.range(1, 2));
    if (i % 2 == 0) {
      imdRoundTrip<2>(rec, rng, pairs);
    } else {
      imdRoundTrip<3>(rec, rng, pairs);
    }
  }
  return rec.take();
}

inline CheckResult nilpotentTraces(std::uint64_t seed) {
  Recorder rec("strictly upper triangular matrices have vanishing traces");
  testing::Rng rng(seed);
  for (int i = 0; i < 30; ++i) {
    const auto n = static_cast<std::size_t>(rng.range(1, 5));
    MatrixQ c(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t s = r + 1; s < n; ++s) c(r, s) = testing::smallRational(rng);
    }
    auto report = traceRadicalTest(c);
    rec.expect(report.inRadical && report.nilpotencyWitness && *report.nilpotencyWitness <= n,
               "random " + std::to_string(n) + "x" + std::to_string(n));
  }
  return rec.take();
}

}  // namespace detail

inline std::vector<CheckResult> runAll(std::uint64_t seed) {
  using Check = std::function<CheckResult(std::uint64_t)>;
  const std::vector<Check> checks = {detail::decideAgainstOracle, detail::idempotentLaws,
                                     detail::momentRoundTrip,     detail::certificatesVerify,
                                     detail::imdSoundness,        detail::nilpotentTraces};
  std::vector<CheckResult> results;
  for (const auto& check : checks) results.push_back(check(seed));
  return results;
}

}  // namespace mz::selftest
