#pragma once

/**
 * @file quotient.hpp
 * @brief The quotient ring k[t]/(f) for a split modulus f, its orthogonal
 *        basis of CRT idempotents, and the idempotent attached to an
 *        algebraic element through a Bezout identity.
 */

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "mz/error.hpp"
#include "mz/upoly.hpp"

namespace mz {

template <Field F>
class Residue;

/// k[t]/(f) with f = prod (t - lambda)^m(lambda). Immutable; residues hold a
/// shared handle to the ring they live in.
template <Field F>
class QuotientRing : public std::enable_shared_from_this<QuotientRing<F>> {
  struct Token {};

 public:
  QuotientRing(Token, RootData<F> roots) : roots_(std::move(roots)), modulus_(roots_.modulus()) {}

  static std::shared_ptr<const QuotientRing> create(RootData<F> roots) {
    if (roots.empty()) throw DomainError("quotient ring needs at least one root");
    return std::make_shared<const QuotientRing>(Token{}, std::move(roots));
  }

  /// Validates that `modulus` equals the product described by `roots`.
  static std::shared_ptr<const QuotientRing> create(const Poly<F>& modulus, RootData<F> roots) {
    auto ring = create(std::move(roots));
    if (ring->modulus() != modulus.monic() || modulus.isZero()) {
      throw DomainError("modulus " + modulus.toString() + " does not match its root data");
    }
    return ring;
  }

  const Poly<F>& modulus() const { return modulus_; }
  const RootData<F>& rootData() const { return roots_; }
  /// Dimension N = deg f.
  std::size_t dimension() const { return static_cast<std::size_t>(modulus_.degree()); }

  Residue<F> element(const Poly<F>& g) const { return Residue<F>(this->shared_from_this(), g); }
  Residue<F> zero() const { return element(Poly<F>{}); }
  Residue<F> one() const { return element(Poly<F>::constant(F(1))); }
  Residue<F> t() const { return element(Poly<F>::t()); }

 private:
  RootData<F> roots_;
  Poly<F> modulus_;
};

template <Field F>
class Residue {
 public:
  Residue(std::shared_ptr<const QuotientRing<F>> ring, const Poly<F>& g)
      : ring_(std::move(ring)), rep_(g % ring_->modulus()) {}

  const Poly<F>& representative() const { return rep_; }
  const QuotientRing<F>& ring() const { return *ring_; }
  bool isZero() const { return rep_.isZero(); }

  Residue& operator+=(const Residue& o) { rep_ += o.rep_; return *this; }
  Residue& operator-=(const Residue& o) { rep_ -= o.rep_; return *this; }
  Residue& operator*=(const Residue& o) {
    checkSameRing(o);
    rep_ = (rep_ * o.rep_) % ring_->modulus();
    return *this;
  }

  friend Residue operator+(Residue a, const Residue& b) { a.checkSameRing(b); return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { a.checkSameRing(b); return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
  friend Residue operator*(Residue a, const F& s) { a.rep_ *= s; return a; }
  friend bool operator==(const Residue& a, const Residue& b) {
    return a.ring_->modulus() == b.ring_->modulus() && a.rep_ == b.rep_;
  }

  Residue pow(std::size_t e) const {
    Residue result = ring_->one();
    Residue base = *this;
    while (e != 0) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e != 0) base *= base;
    }
    return result;
  }

  bool isIdempotent() const { return *this * *this == *this; }

 private:
  void checkSameRing(const Residue& o) const {
    if (ring_->modulus() != o.ring_->modulus()) throw DomainError("residues from different quotient rings");
  }

  std::shared_ptr<const QuotientRing<F>> ring_;
  Poly<F> rep_;
};

/// Residue of g modulo R's modulus, evaluated as q(a) for a polynomial q.
template <Field F>
Residue<F> evalAtResidue(const Poly<F>& q, const Residue<F>& a) {
  return evalIn(q, a, a.ring().one());
}

/// g_lambda == 1 mod (t-lambda)^m(lambda) and == 0 mod the other primary
/// factors, one per root in root order. Computed from the Bezout identity of
/// (t-lambda)^m and f/(t-lambda)^m.
template <Field F>
std::vector<Residue<F>> crtIdempotents(const QuotientRing<F>& ring) {
  std::vector<Residue<F>> out;
  out.reserve(ring.rootData().size());
  for (const auto& root : ring.rootData()) {
    Poly<F> primary = Poly<F>::linear(root.value).pow(root.multiplicity);
    Poly<F> cofactor = ring.modulus() / primary;
    auto bezout = extendedGcd(primary, cofactor);
    out.push_back(ring.element(bezout.v * cofactor));
  }
  return out;
}

/// A subset of root indices together with the idempotent it selects.
template <Field F>
struct IdempotentEntry {
  std::vector<std::size_t> subset;
  Residue<F> value;
};

/// Visits subsets of {0..n-1} in increasing size, lexicographically within a
/// size, including the empty set first. Stops early when `visit` returns false.
template <typename Visit>
void forEachSubsetBySize(std::size_t n, Visit&& visit) {
  std::vector<std::size_t> subset;
  if (!visit(subset)) return;
  for (std::size_t k = 1; k <= n; ++k) {
    subset.resize(k);
    for (std::size_t i = 0; i < k; ++i) subset[i] = i;
    while (true) {
      if (!visit(subset)) return;
      std::size_t i = k;
      while (i > 0 && subset[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++subset[i - 1];
      for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
}

/// Every idempotent of k[t]/(f): the 2^|roots| subset sums of the CRT
/// idempotents, enumerated by increasing subset size, then lexicographically.
template <Field F>
std::vector<IdempotentEntry<F>> allIdempotents(const QuotientRing<F>& ring) {
  auto basis = crtIdempotents(ring);
  std::vector<IdempotentEntry<F>> out;
  forEachSubsetBySize(basis.size(), [&](const std::vector<std::size_t>& subset) {
    Residue<F> sum = ring.zero();
    for (auto i : subset) sum += basis[i];
    out.push_back({subset, std::move(sum)});
    return true;
  });
  return out;
}

template <Field F>
struct IdempotentLift {
  Residue<F> idempotent;  ///< e = e(a)
  Poly<F> polynomial;     ///< e(t) = t^n u(t)
  std::size_t n = 0;      ///< a^n e = a^n
};

/// Given q(a) = 0 and N >= 1, writes q(t) t^N = t^n h(t) with h(0) != 0,
/// solves u t^n + v h = 1 and returns e = a^n u(a). Then e^2 = e, a^n e = a^n,
/// and e is a combination of powers a^j with j >= n >= N.
template <Field F>
IdempotentLift<F> idempotentFromElement(const Residue<F>& a, const Poly<F>& annihilator, std::size_t minExponent) {
  if (annihilator.isZero()) throw DomainError("idempotentFromElement: annihilator must be nonzero");
  if (minExponent == 0) throw DomainError("idempotentFromElement: N must be at least 1");
  if (!evalAtResidue(annihilator, a).isZero()) {
    throw DomainError("idempotentFromElement: q(a) != 0 for q = " + annihilator.toString());
  }
  Poly<F> shifted = annihilator.shifted(minExponent);
  std::size_t n = 0;
  while (shifted.coeff(n).isZero()) ++n;
  Poly<F> h(std::vector<F>(shifted.coefficients().begin() + static_cast<long>(n), shifted.coefficients().end()));
  Poly<F> tn = Poly<F>::monomial(F(1), n);
  auto bezout = extendedGcd(tn, h);
  Poly<F> e = tn * bezout.u;
  return {evalAtResidue(e, a), e, n};
}

}  // namespace mz
