#pragma once

/**
 * @file mzdecide.hpp
 * @brief Deciding whether V = ker(L_1, ..., L_d) is a Mathieu-Zhao subspace
 *        of k[t] when V contains a nonzero ideal.
 *
 * After normalization (f generates the largest ideal inside V), V is an
 * MZ-space iff for every nonempty subset S of the roots some L_i has
 * sum_{lambda in S} P_lambda^(i)(0) != 0. A failing subset yields the
 * idempotent g = sum_{lambda in S} g_lambda lying in V while some b*g does not.
 *
 * `oracleDecideMZ` answers the same question without the closed form: it
 * enumerates every idempotent of k[t]/(f) and tests A e subset V directly.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mz/error.hpp"
#include "mz/functionals.hpp"
#include "mz/linalg.hpp"
#include "mz/quotient.hpp"

namespace mz {

inline constexpr std::size_t kDefaultMaxSubsetRoots = 20;

/// Rejection raised when the functionals are linearly dependent; carries the
/// coefficients c with sum_i c_i L_i = 0.
template <Field F>
class DependentFunctionalsError : public DomainError {
 public:
  DependentFunctionalsError(const std::string& what, std::vector<F> relation)
      : DomainError(what), relation_(std::move(relation)) {}
  const std::vector<F>& relation() const { return relation_; }

 private:
  std::vector<F> relation_;
};

template <Field F>
struct SubspaceSpec {
  std::vector<FunctionalNF<F>> functionals;
  bool normalized = false;

  const RootData<F>& rootData() const {
    if (functionals.empty()) throw DomainError("subspace spec without functionals");
    return functionals.front().rootData();
  }
};

template <Field F>
struct MZVerdict {
  bool isMZ = true;
  std::optional<std::vector<std::size_t>> witnessSubset;  ///< indices into the root data
  std::optional<Poly<F>> witnessIdempotent;
  std::optional<Poly<F>> witnessMultiplier;
  std::vector<F> witnessValue;  ///< L(b g), nonzero in some coordinate when present
};

/// (L_1(g), ..., L_d(g))
template <Field F>
std::vector<F> evaluateAll(const SubspaceSpec<F>& spec, const Poly<F>& g) {
  std::vector<F> out;
  out.reserve(spec.functionals.size());
  for (const auto& L : spec.functionals) out.push_back(evaluate(L, g));
  return out;
}

template <Field F>
bool allZero(const std::vector<F>& v) {
  for (const auto& x : v) {
    if (!x.isZero()) return false;
  }
  return true;
}

/// Replaces the declared multiplicities by the exponents of the largest ideal
/// in V, drops roots that do not occur, and checks linear independence.
template <Field F>
SubspaceSpec<F> normalize(const SubspaceSpec<F>& spec) {
  if (spec.functionals.empty()) throw DomainError("normalize: at least one functional is required");
  for (std::size_t i = 0; i < spec.functionals.size(); ++i) {
    if (spec.functionals[i].isZero()) throw DomainError("normalize: functional " + std::to_string(i + 1) + " is zero");
  }
  auto exps = largestIdealExponents(spec.functionals);
  const RootData<F>& old = spec.rootData();

  std::vector<Root<F>> kept;
  std::vector<std::size_t> keptIndex;
  for (std::size_t i = 0; i < old.size(); ++i) {
    if (exps[i] == 0) continue;
    kept.push_back({old[i].value, exps[i]});
    keptIndex.push_back(i);
  }
  if (kept.empty()) throw DomainError("normalize: every functional vanishes identically");
  RootData<F> roots(std::move(kept));

  SubspaceSpec<F> out;
  for (const auto& L : spec.functionals) {
    std::vector<Poly<F>> ops;
    for (auto i : keptIndex) ops.push_back(L.operatorAt(i));
    out.functionals.emplace_back(roots, std::move(ops));
  }

  const std::size_t N = roots.totalMultiplicity();
  const std::size_t d = out.functionals.size();
  Matrix<F> moments(d, N);
  for (std::size_t i = 0; i < d; ++i) {
    auto a = toMoments(out.functionals[i], N);
    for (std::size_t n = 0; n < N; ++n) moments(i, n) = a[n];
  }
  if (auto relation = leftKernelVector(moments)) {
    std::string text;
    for (std::size_t i = 0; i < relation->size(); ++i) {
      if ((*relation)[i].isZero()) continue;
      if (!text.empty()) text += " + ";
      text += "(" + (*relation)[i].toString() + ")*L" + std::to_string(i + 1);
    }
    throw DependentFunctionalsError<F>("normalize: functionals are linearly dependent: " + text + " = 0",
                                       std::move(*relation));
  }
  out.normalized = true;
  return out;
}

namespace detail {

inline void checkRootCap(std::size_t roots, std::size_t cap) {
  if (roots > cap) {
    throw DomainError("subset enumeration over " + std::to_string(roots) + " roots exceeds the cap of " +
                      std::to_string(cap));
  }
}

template <Field F>
void requireNormalized(const SubspaceSpec<F>& spec) {
  if (!spec.normalized) throw DomainError("spec must be normalized first");
}

}  // namespace detail

/// Closed-form decision over subset sums of P_lambda^(i)(0). Characteristic
/// zero only.
template <CharZeroField F>
MZVerdict<F> decideMZ(const SubspaceSpec<F>& spec, std::size_t maxSubsetRoots = kDefaultMaxSubsetRoots) {
  detail::requireNormalized(spec);
  const RootData<F>& roots = spec.rootData();
  detail::checkRootCap(roots.size(), maxSubsetRoots);

  // constant terms P_lambda^(i)(0), indexed [i][lambda]
  std::vector<std::vector<F>> constants;
  for (const auto& L : spec.functionals) {
    std::vector<F> row;
    for (const auto& op : L.operators()) row.push_back(op.coeff(0));
    constants.push_back(std::move(row));
  }

  MZVerdict<F> verdict;
  forEachSubsetBySize(roots.size(), [&](const std::vector<std::size_t>& subset) {
    if (subset.empty()) return true;
    for (const auto& row : constants) {
      F sum(0);
      for (auto j : subset) sum += row[j];
      if (!sum.isZero()) return true;
    }
    verdict.isMZ = false;
    verdict.witnessSubset = subset;
    return false;
  });
  if (verdict.isMZ) return verdict;

  auto ring = QuotientRing<F>::create(roots);
  auto basis = crtIdempotents(*ring);
  Residue<F> g = ring->zero();
  for (auto j : *verdict.witnessSubset) g += basis[j];
  verdict.witnessIdempotent = g.representative();

  for (std::size_t j = 0; j < ring->dimension(); ++j) {
    Poly<F> b = Poly<F>::monomial(F(1), j);
    auto value = evaluateAll(spec, (b * g.representative()) % ring->modulus());
    if (!allZero(value)) {
      verdict.witnessMultiplier = b;
      verdict.witnessValue = std::move(value);
      return verdict;
    }
  }
  throw std::logic_error("decideMZ: no witness multiplier although (f) is the largest ideal in V");
}

/// Brute-force decision: V is MZ iff every idempotent e of k[t]/(f) with
/// L(e) = 0 also has L(t^j e) = 0 for 0 <= j < N.
template <Field F>
bool oracleDecideMZ(const SubspaceSpec<F>& spec, std::size_t maxSubsetRoots = kDefaultMaxSubsetRoots) {
  detail::requireNormalized(spec);
  detail::checkRootCap(spec.rootData().size(), maxSubsetRoots);
  auto ring = QuotientRing<F>::create(spec.rootData());
  for (const auto& entry : allIdempotents(*ring)) {
    const Poly<F>& e = entry.value.representative();
    if (!allZero(evaluateAll(spec, e))) continue;
    for (std::size_t j = 0; j < ring->dimension(); ++j) {
      if (!allZero(evaluateAll(spec, (e.shifted(j)) % ring->modulus()))) return false;
    }
  }
  return true;
}

/// g in sr(V) = r((f)) iff prod_{lambda} (t - lambda) divides g.
template <Field F>
bool strongRadicalMembership(const SubspaceSpec<F>& spec, const Poly<F>& g) {
  detail::requireNormalized(spec);
  return divides(spec.rootData().reducedModulus(), g);
}

struct RadicalProbeReport {
  std::size_t checkedUpTo = 0;
  std::vector<std::size_t> violations;          ///< exponents m with L(b g^m) != 0
  std::optional<std::size_t> firstViolation;
  /// Least m0 with no violation in m0..checkedUpTo (checkedUpTo + 1 if m = M fails).
  std::size_t stableFrom = 1;
};

/// Bounded test of the radical condition: L(b g^m) = 0 for m = 1..M. Never a
/// membership proof, only "no violation up to M" or the violating exponents.
template <Field F>
RadicalProbeReport radicalProbe(const SubspaceSpec<F>& spec, const Poly<F>& g, std::size_t maxExponent,
                                const Poly<F>& multiplier = Poly<F>::constant(F(1))) {
  if (maxExponent == 0) throw DomainError("radicalProbe: M must be at least 1");
  const Poly<F> f = spec.rootData().modulus();
  RadicalProbeReport report;
  report.checkedUpTo = maxExponent;
  Poly<F> base = g % f;
  Poly<F> power = Poly<F>::constant(F(1));
  for (std::size_t m = 1; m <= maxExponent; ++m) {
    power = (power * base) % f;
    if (!allZero(evaluateAll(spec, (multiplier * power) % f))) {
      report.violations.push_back(m);
      if (!report.firstViolation) report.firstViolation = m;
      report.stableFrom = m + 1;
    }
  }
  return report;
}

}  // namespace mz
