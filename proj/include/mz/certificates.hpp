#pragma once

/**
 * @file certificates.hpp
 * @brief Exact moment functionals L(t^i) = 1/(i+1) (integral over [0,1]) and
 *        L(t^i) = i! (integral against e^-t on [0,inf)), with p-adic
 *        certificates that L(f^m) != 0 for a given nonzero f.
 *
 * Unit interval, f monic of degree d: for p = md + 1 prime and not dividing
 * any denominator of f, the lead term 1/(md+1) of L(f^m) has valuation -1
 * while every other term g_i/(i+1) has valuation >= 0, so v_p(L(f^m)) = -1.
 *
 * Exponential, f = t^r (1 + ...): for p = rm + 1 prime, L(f^m)/(rm)! is
 * 1 plus a multiple of p, hence a p-adic unit, so v_p(L(f^m)) = v_p((rm)!).
 *
 * The theory only selects the candidate (m, p); every certificate is
 * confirmed by expanding f^m exactly before it is returned.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mz/error.hpp"
#include "mz/upoly.hpp"

namespace mz {

enum class MomentKind { UnitInterval, Exponential };

inline std::string toString(MomentKind kind) {
  return kind == MomentKind::UnitInterval ? "unit" : "exp";
}

class MomentRule {
 public:
  explicit constexpr MomentRule(MomentKind kind) : kind_(kind) {}

  constexpr MomentKind kind() const { return kind_; }

  Rational momentOf(std::size_t i) const {
    if (kind_ == MomentKind::UnitInterval) return Rational(1L, static_cast<long>(i) + 1);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(i));
    return Rational(fact);
  }

  Rational apply(const Poly<Rational>& g) const {
    mpq_class sum = 0;
    if (kind_ == MomentKind::UnitInterval) {
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (!g.coeff(i).isZero()) sum += g.coeff(i).raw() / mpq_class(static_cast<long>(i) + 1);
      }
    } else {
      mpz_class fact = 1;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (i > 0) fact *= static_cast<unsigned long>(i);
        if (!g.coeff(i).isZero()) sum += g.coeff(i).raw() * fact;
      }
    }
    return Rational(sum);
  }

 private:
  MomentKind kind_;
};

/// L(f^m), by exact expansion of f^m and termwise moments.
inline Rational powerMoment(const MomentRule& rule, const Poly<Rational>& f, std::size_t m) {
  return rule.apply(f.pow(m));
}

struct PAdicCertificate {
  MomentKind rule = MomentKind::UnitInterval;
  std::uint64_t p = 0;
  std::size_t m = 0;
  long claimedValuation = 0;
  Rational verifiedValue;  ///< the exact L(f^m)
};

/// Re-expands f^m and checks the certificate; never trusts the theory.
inline bool verifyCertificate(const PAdicCertificate& cert, const Poly<Rational>& f) {
  Rational value = powerMoment(MomentRule(cert.rule), f, cert.m);
  if (value.isZero() || value != cert.verifiedValue) return false;
  return padicValuation(value, cert.p) == PAdicValue(cert.claimedValuation);
}

namespace detail {

inline bool primeDividesSomeDenominator(const Poly<Rational>& f, std::uint64_t p) {
  for (const auto& c : f.coefficients()) {
    if (mpz_divisible_ui_p(c.denominator().get_mpz_t(), static_cast<unsigned long>(p)) != 0) return true;
  }
  return false;
}

inline long factorialValuation(std::size_t n, std::uint64_t p) {
  long v = 0;
  for (std::uint64_t q = p; q <= n; q *= p) v += static_cast<long>(n / q);
  return v;
}

}  // namespace detail

/// Minimum p-adic valuation over the non-lead terms g_i^(m)/(i+1), i < md,
/// of the unit-interval expansion of L(f^m). Expected to be >= 0 at a
/// certificate's (m, p).
inline PAdicValue unitIntervalTailValuation(const Poly<Rational>& f, std::size_t m, std::uint64_t p) {
  Poly<Rational> power = f.pow(m);
  PAdicValue minimum = PAdicValue::infinity();
  for (std::size_t i = 0; i + 1 < power.size(); ++i) {
    if (power.coeff(i).isZero()) continue;
    auto v = padicValuation(power.coeff(i) / Rational(static_cast<long>(i) + 1), p);
    if (v < minimum) minimum = v;
  }
  return minimum;
}

/// Searches m = mMin, mMin+1, ... (searchBound candidates) for p = m*deg(f)+1
/// prime and coprime to f's denominators, then verifies v_p(L(f^m)) = -1.
/// Returns nullopt when the search is exhausted; that is never a disproof.
inline std::optional<PAdicCertificate> certifyUnitInterval(const Poly<Rational>& f, std::size_t mMin,
                                                           std::size_t searchBound) {
  if (f.degree() < 1) throw DomainError("certifyUnitInterval: f must have degree >= 1");
  if (f.leading() != Rational(1)) {
    throw DomainError("certifyUnitInterval: f must be monic (divide by the leading coefficient " +
                      f.leading().toString() + ")");
  }
  if (mMin == 0) throw DomainError("certifyUnitInterval: mMin must be at least 1");
  const auto d = static_cast<std::uint64_t>(f.degree());
  const MomentRule rule(MomentKind::UnitInterval);
  for (std::size_t m = mMin; m < mMin + searchBound; ++m) {
    const std::uint64_t p = m * d + 1;
    if (!isPrime(p) || detail::primeDividesSomeDenominator(f, p)) continue;
    PAdicCertificate cert{MomentKind::UnitInterval, p, m, -1, powerMoment(rule, f, m)};
    if (cert.verifiedValue.isZero()) continue;
    if (padicValuation(cert.verifiedValue, p) != PAdicValue(cert.claimedValuation)) continue;
    return cert;
  }
  return std::nullopt;
}

/// f must be t^r + c_{r+1} t^{r+1} + ... + c_{r+d} t^{r+d} with r, d >= 1.
/// Searches p = r*m + 1 prime and verifies v_p(L(f^m)) = v_p((rm)!).
inline std::optional<PAdicCertificate> certifyExponential(const Poly<Rational>& f, std::size_t mMin,
                                                          std::size_t searchBound) {
  if (f.isZero()) throw DomainError("certifyExponential: f must be nonzero");
  std::size_t r = 0;
  while (f.coeff(r).isZero()) ++r;
  if (f.coeff(r) != Rational(1)) {
    throw DomainError("certifyExponential: lowest coefficient must be 1 (divide f by " + f.coeff(r).toString() + ")");
  }
  if (r == 0) throw DomainError("certifyExponential: f must be divisible by t (r >= 1)");
  if (static_cast<std::size_t>(f.degree()) == r) {
    throw DomainError("certifyExponential: f = t^r already has L(f^m) = (rm)! != 0; no certificate needed");
  }
  if (mMin == 0) throw DomainError("certifyExponential: mMin must be at least 1");
  const MomentRule rule(MomentKind::Exponential);
  for (std::size_t m = mMin; m < mMin + searchBound; ++m) {
    const std::uint64_t p = static_cast<std::uint64_t>(r) * m + 1;
    if (!isPrime(p) || detail::primeDividesSomeDenominator(f, p)) continue;
    PAdicCertificate cert{MomentKind::Exponential, p, m, detail::factorialValuation(r * m, p),
                          powerMoment(rule, f, m)};
    if (cert.verifiedValue.isZero()) continue;
    if (padicValuation(cert.verifiedValue, p) != PAdicValue(cert.claimedValuation)) continue;
    return cert;
  }
  return std::nullopt;
}

}  // namespace mz
