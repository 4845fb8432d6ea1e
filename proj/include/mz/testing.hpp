#pragma once

/**
 * @file testing.hpp
 * @brief Seeded random instance generators shared by the self-test, the unit
 *        tests and the acceptance suite.
 *
 * Draws use std::mt19937_64 (fully specified by the standard) reduced with a
 * plain modulo, so a seed yields the same instances on every platform.
 */

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "mz/imagep.hpp"
#include "mz/mzdecide.hpp"
#include "mz/upoly.hpp"

namespace mz::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  long range(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(engine_() % span);
  }
  bool chance(unsigned numerator, unsigned denominator) { return engine_() % denominator < numerator; }

 private:
  std::mt19937_64 engine_;
};

/// Integer or half-integer in [-bound, bound].
inline Rational smallRational(Rng& rng, long bound = 5) {
  if (rng.chance(1, 4)) return Rational(rng.range(-2 * bound, 2 * bound), 2);
  return Rational(rng.range(-bound, bound));
}

inline Poly<Rational> randomPoly(Rng& rng, std::size_t maxDegree, long bound = 5) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i <= maxDegree; ++i) c.push_back(smallRational(rng, bound));
  return Poly<Rational>(std::move(c));
}

inline RootData<Rational> randomRoots(Rng& rng, std::size_t maxRoots, std::size_t maxMultiplicity) {
  const auto count = static_cast<std::size_t>(rng.range(1, static_cast<long>(maxRoots)));
  std::vector<Root<Rational>> roots;
  while (roots.size() < count) {
    Rational lambda = smallRational(rng);
    bool fresh = true;
    for (const auto& r : roots) fresh = fresh && r.value != lambda;
    if (!fresh) continue;
    roots.push_back({lambda, static_cast<std::size_t>(rng.range(1, static_cast<long>(maxMultiplicity)))});
  }
  return RootData<Rational>(std::move(roots));
}

inline FunctionalNF<Rational> randomFunctional(Rng& rng, const RootData<Rational>& roots) {
  std::vector<Poly<Rational>> ops;
  for (const auto& r : roots) {
    if (rng.chance(1, 5)) {
      ops.emplace_back();
      continue;
    }
    ops.push_back(randomPoly(rng, r.multiplicity - 1));
  }
  return FunctionalNF<Rational>(roots, std::move(ops));
}

/// Random normalized spec with at most `maxRoots` roots of multiplicity at most
/// `maxMultiplicity` and at most `maxFunctionals` functionals. About a third of
/// the draws force operator constant terms to cancel on some subset so that
/// non-MZ instances are common.
inline SubspaceSpec<Rational> randomNormalizedSpec(Rng& rng, std::size_t maxRoots = 3, std::size_t maxMultiplicity = 3,
                                                   std::size_t maxFunctionals = 3) {
  while (true) {
    RootData<Rational> roots = randomRoots(rng, maxRoots, maxMultiplicity);
    const auto d = static_cast<std::size_t>(rng.range(1, static_cast<long>(maxFunctionals)));
    SubspaceSpec<Rational> spec;
    const bool cancel = roots.size() >= 2 && rng.chance(1, 3);
    for (std::size_t i = 0; i < d; ++i) {
      FunctionalNF<Rational> L = randomFunctional(rng, roots);
      if (cancel) {
        std::vector<Poly<Rational>> ops = L.operators();
        Rational total(0);
        for (std::size_t j = 0; j + 1 < ops.size(); ++j) total += ops[j].coeff(0);
        std::vector<Rational> last = ops.back().coefficients();
        if (last.empty()) last.push_back(Rational(0));
        last[0] = -total;
        ops.back() = Poly<Rational>(std::move(last));
        L = FunctionalNF<Rational>(roots, std::move(ops));
      }
      spec.functionals.push_back(std::move(L));
    }
    try {
      return normalize(spec);
    } catch (const DomainError&) {
      continue;
    }
  }
}

/// Random element of the x-degree/total-degree bounded part of F_P[zeta, x].
template <std::uint32_t P>
ZXPoly<P> randomZXPoly(Rng& rng, std::size_t pairs, std::size_t maxTotalDegree, unsigned densityPercent = 35) {
  ZXPoly<P> f(pairs);
  std::vector<unsigned> exps(2 * pairs, 0);
  // odometer over all exponent vectors of total degree <= maxTotalDegree
  while (true) {
    unsigned deg = 0;
    for (auto e : exps) deg += e;
    if (deg <= maxTotalDegree && rng.chance(densityPercent, 100)) {
      std::vector<unsigned> zeta(exps.begin(), exps.begin() + static_cast<long>(pairs));
      std::vector<unsigned> x(exps.begin() + static_cast<long>(pairs), exps.end());
      f.add(ZXPoly<P>::makeKey(zeta, x), Zp<P>(rng.range(1, P - 1)));
    }
    std::size_t i = 0;
    while (i < exps.size()) {
      if (++exps[i] <= maxTotalDegree) break;
      exps[i] = 0;
      ++i;
    }
    if (i == exps.size()) break;
  }
  return f;
}

/// Random polynomial all of whose monomials are divisible by some zeta_i,
/// i.e. all x-coefficients lie in I = (zeta_1..zeta_n); never zero.
template <std::uint32_t P>
ZXPoly<P> randomZXPolyInI(Rng& rng, std::size_t pairs, std::size_t maxTotalDegree) {
  while (true) {
    ZXPoly<P> raw = randomZXPoly<P>(rng, pairs, maxTotalDegree);
    ZXPoly<P> f(pairs);
    for (const auto& [k, c] : raw.terms()) {
      if (zetaDegreeOf(k) != 0) f.add(k, c);
    }
    if (!f.isZero()) return f;
  }
}

}  // namespace mz::testing
