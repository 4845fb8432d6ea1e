#pragma once

/**
 * @file imagep.hpp
 * @brief Membership in ImD = sum_i (d/dx_i - zeta_i) A[x] for
 *        A = F_p[zeta_1..zeta_n], with certificates.
 *
 * Decision procedure: let b_d be the top x-degree part of b. If some
 * coefficient of b_d (a polynomial in zeta) has a nonzero constant term, b is
 * not in ImD, because members have all top coefficients in I = (zeta_1..zeta_n).
 * Otherwise each monomial zeta_i c x^a of b_d is rewritten as
 *
 *     zeta_i c x^a = (d_i - zeta_i)(-c x^a) + c a_i x^(a - e_i),
 *
 * which records -c x^a in the i-th preimage and strictly lowers the x-degree.
 * Reaching zero yields (q_1..q_n) with b = sum_i (d_i - zeta_i) q_i, and the
 * certificate is re-verified before it is returned.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mz/error.hpp"
#include "mz/scalars.hpp"

namespace mz {

inline constexpr std::size_t kMaxVariablePairs = 4;

/// Exponents of one monomial zeta^beta x^alpha: x_i at index i, zeta_i at
/// index kMaxVariablePairs + i.
using ZXKey = std::array<std::uint8_t, 2 * kMaxVariablePairs>;

struct ImagepLimits {
  std::size_t maxTotalDegree = 24;
  std::size_t maxPairs = 3;
};

namespace detail {

inline unsigned keyDegree(const ZXKey& k, std::size_t from, std::size_t to) {
  unsigned s = 0;
  for (std::size_t i = from; i < to; ++i) s += k[i];
  return s;
}

/// Descending graded lexicographic order on (x-exponents, zeta-exponents).
struct ZXKeyOrder {
  bool operator()(const ZXKey& a, const ZXKey& b) const {
    unsigned da = keyDegree(a, 0, a.size());
    unsigned db = keyDegree(b, 0, b.size());
    if (da != db) return da > db;
    return a > b;
  }
};

}  // namespace detail

inline unsigned xDegreeOf(const ZXKey& k) { return detail::keyDegree(k, 0, kMaxVariablePairs); }
inline unsigned zetaDegreeOf(const ZXKey& k) { return detail::keyDegree(k, kMaxVariablePairs, k.size()); }

/// Polynomial in zeta_1..zeta_n, x_1..x_n over F_P.
template <std::uint32_t P>
class ZXPoly {
 public:
  using Scalar = Zp<P>;

  explicit ZXPoly(std::size_t pairs) : pairs_(pairs) {
    if (pairs == 0 || pairs > kMaxVariablePairs) {
      throw DomainError("ZXPoly: number of variable pairs must be in 1.." + std::to_string(kMaxVariablePairs));
    }
  }

  static ZXKey makeKey(const std::vector<unsigned>& zeta, const std::vector<unsigned>& x) {
    if (zeta.size() > kMaxVariablePairs || x.size() > kMaxVariablePairs) throw DomainError("ZXPoly: too many variables");
    ZXKey k{};
    for (std::size_t i = 0; i < x.size(); ++i) k[i] = checkedExponent(x[i]);
    for (std::size_t i = 0; i < zeta.size(); ++i) k[kMaxVariablePairs + i] = checkedExponent(zeta[i]);
    return k;
  }

  static ZXPoly monomial(std::size_t pairs, const std::vector<unsigned>& zeta, const std::vector<unsigned>& x,
                         Scalar c = Scalar(1)) {
    if (zeta.size() != pairs || x.size() != pairs) throw DomainError("ZXPoly: exponent vector length must equal n");
    ZXPoly p(pairs);
    p.add(makeKey(zeta, x), c);
    return p;
  }
  static ZXPoly constant(std::size_t pairs, Scalar c) {
    ZXPoly p(pairs);
    p.add(ZXKey{}, c);
    return p;
  }
  static ZXPoly zeta(std::size_t pairs, std::size_t i) {
    ZXPoly p(pairs);
    ZXKey k{};
    k.at(kMaxVariablePairs + p.checkIndex(i)) = 1;
    p.add(k, Scalar(1));
    return p;
  }
  static ZXPoly x(std::size_t pairs, std::size_t i) {
    ZXPoly p(pairs);
    ZXKey k{};
    k.at(p.checkIndex(i)) = 1;
    p.add(k, Scalar(1));
    return p;
  }

  std::size_t pairs() const { return pairs_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t termCount() const { return terms_.size(); }
  const std::map<ZXKey, Scalar, detail::ZXKeyOrder>& terms() const { return terms_; }

  void add(const ZXKey& k, Scalar c) {
    for (std::size_t i = pairs_; i < kMaxVariablePairs; ++i) {
      if (k[i] != 0 || k[kMaxVariablePairs + i] != 0) throw DomainError("ZXPoly: exponent on an unused variable");
    }
    if (c.isZero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.isZero()) terms_.erase(it);
    }
  }

  Scalar coeff(const ZXKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  /// Highest total x-degree of a term; -1 for zero.
  long xDegree() const {
    long d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, static_cast<long>(xDegreeOf(k)));
    return d;
  }
  /// Highest total degree in (zeta, x); -1 for zero.
  long totalDegree() const { return terms_.empty() ? -1 : static_cast<long>(detail::keyDegree(terms_.begin()->first, 0, 2 * kMaxVariablePairs)); }

  ZXPoly operator-() const {
    ZXPoly r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }
  ZXPoly& operator+=(const ZXPoly& o) {
    checkPairs(o);
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  ZXPoly& operator-=(const ZXPoly& o) {
    checkPairs(o);
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  friend ZXPoly operator+(ZXPoly a, const ZXPoly& b) { return a += b; }
  friend ZXPoly operator-(ZXPoly a, const ZXPoly& b) { return a -= b; }
  friend ZXPoly operator*(ZXPoly a, Scalar s) {
    if (s.isZero()) return ZXPoly(a.pairs_);
    for (auto& [k, c] : a.terms_) c *= s;
    return a;
  }
  friend ZXPoly operator*(const ZXPoly& a, const ZXPoly& b) {
    a.checkPairs(b);
    ZXPoly r(a.pairs_);
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) {
        ZXKey k{};
        for (std::size_t i = 0; i < k.size(); ++i) k[i] = checkedExponent(unsigned{ka[i]} + kb[i]);
        r.add(k, ca * cb);
      }
    }
    return r;
  }
  ZXPoly& operator*=(const ZXPoly& o) { return *this = *this * o; }
  friend bool operator==(const ZXPoly& a, const ZXPoly& b) { return a.pairs_ == b.pairs_ && a.terms_ == b.terms_; }

  ZXPoly pow(std::size_t e) const {
    ZXPoly result = constant(pairs_, Scalar(1));
    ZXPoly base = *this;
    while (e != 0) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e != 0) base *= base;
    }
    return result;
  }

  std::string toString() const {
    if (isZero()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += c.toString();
      for (std::size_t i = 0; i < pairs_; ++i) {
        if (k[kMaxVariablePairs + i] != 0) s += "*z" + std::to_string(i + 1) + "^" + std::to_string(k[kMaxVariablePairs + i]);
      }
      for (std::size_t i = 0; i < pairs_; ++i) {
        if (k[i] != 0) s += "*x" + std::to_string(i + 1) + "^" + std::to_string(k[i]);
      }
    }
    return s;
  }

  std::size_t checkIndex(std::size_t i) const {
    if (i >= pairs_) throw DomainError("variable index " + std::to_string(i) + " out of range for n = " + std::to_string(pairs_));
    return i;
  }

 private:
  static std::uint8_t checkedExponent(unsigned e) {
    if (e > 255) throw DomainError("ZXPoly: exponent exceeds 255");
    return static_cast<std::uint8_t>(e);
  }
  void checkPairs(const ZXPoly& o) const {
    if (pairs_ != o.pairs_) throw DomainError("ZXPoly: operands have different numbers of variables");
  }

  std::size_t pairs_;
  std::map<ZXKey, Scalar, detail::ZXKeyOrder> terms_;
};

/// (d/dx_i - zeta_i)(q), with i zero-based.
template <std::uint32_t P>
ZXPoly<P> applyD(std::size_t i, const ZXPoly<P>& q) {
  q.checkIndex(i);
  ZXPoly<P> out(q.pairs());
  for (const auto& [k, c] : q.terms()) {
    if (k[i] != 0) {
      ZXKey lowered = k;
      --lowered[i];
      out.add(lowered, c * Zp<P>(static_cast<unsigned>(k[i])));
    }
    ZXKey raised = k;
    if (raised[kMaxVariablePairs + i] == 255) throw DomainError("applyD: exponent exceeds 255");
    ++raised[kMaxVariablePairs + i];
    out.add(raised, -c);
  }
  return out;
}

/// Preimages q_1..q_n with sum_i (d_i - zeta_i) q_i equal to the certified
/// polynomial.
template <std::uint32_t P>
struct ImDCertificate {
  std::vector<ZXPoly<P>> preimages;

  ZXPoly<P> reconstruct(std::size_t pairs) const {
    ZXPoly<P> sum(pairs);
    for (std::size_t i = 0; i < preimages.size(); ++i) sum += applyD(i, preimages[i]);
    return sum;
  }
  bool certifies(const ZXPoly<P>& b) const {
    return preimages.size() == b.pairs() && reconstruct(b.pairs()) == b;
  }
};

/// b is not in ImD: `reduced` = b - sum_i (d_i - zeta_i) partial_i has a top
/// x-degree monomial x^offendingX whose coefficient has a nonzero constant term.
template <std::uint32_t P>
struct ObstructionReport {
  std::size_t xDegree = 0;
  std::vector<unsigned> offendingX;
  Zp<P> coefficient;
  ZXPoly<P> reduced;
  std::vector<ZXPoly<P>> partialPreimages;

  /// Re-checks every stated fact about the obstruction.
  bool consistentWith(const ZXPoly<P>& b) const {
    ZXPoly<P> lhs = reduced;
    for (std::size_t i = 0; i < partialPreimages.size(); ++i) lhs += applyD(i, partialPreimages[i]);
    if (!(lhs == b) || coefficient.isZero()) return false;
    if (reduced.xDegree() != static_cast<long>(xDegree)) return false;
    std::vector<unsigned> zeros(b.pairs(), 0);
    ZXKey k = ZXPoly<P>::makeKey(zeros, offendingX);
    return xDegreeOf(k) == xDegree && reduced.coeff(k) == coefficient;
  }
};

template <std::uint32_t P>
struct ImDDecision {
  std::optional<ImDCertificate<P>> certificate;
  std::optional<ObstructionReport<P>> obstruction;
  bool isMember() const { return certificate.has_value(); }
};

namespace detail {

inline std::vector<std::size_t> identityOrder(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

template <std::uint32_t P>
void checkDegreeCap(const ZXPoly<P>& b, const ImagepLimits& limits) {
  if (b.pairs() > limits.maxPairs) {
    throw DomainError("n = " + std::to_string(b.pairs()) + " exceeds the cap of " + std::to_string(limits.maxPairs));
  }
  if (b.totalDegree() > static_cast<long>(limits.maxTotalDegree)) {
    throw DomainError("total degree " + std::to_string(b.totalDegree()) + " exceeds the cap of " +
                      std::to_string(limits.maxTotalDegree));
  }
}

}  // namespace detail

/// Complete membership decision for ImD. `order` lists the variable indices
/// in tie-break priority: a top-degree monomial is rewritten through the first
/// zeta_i in this order that divides it.
template <std::uint32_t P>
ImDDecision<P> imDDecide(const ZXPoly<P>& b, const std::vector<std::size_t>& order, const ImagepLimits& limits = {}) {
  detail::checkDegreeCap(b, limits);
  const std::size_t n = b.pairs();
  {
    std::vector<std::size_t> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != detail::identityOrder(n)) throw DomainError("imDDecide: order must be a permutation of 0..n-1");
  }

  ZXPoly<P> rest = b;
  std::vector<ZXPoly<P>> q(n, ZXPoly<P>(n));
  while (!rest.isZero()) {
    const long d = rest.xDegree();
    std::vector<std::pair<ZXKey, Zp<P>>> top;
    for (const auto& [k, c] : rest.terms()) {
      if (static_cast<long>(xDegreeOf(k)) == d) top.emplace_back(k, c);
    }
    for (const auto& [k, c] : top) {
      if (zetaDegreeOf(k) != 0) continue;
      ObstructionReport<P> report{static_cast<std::size_t>(d), {}, c, rest, q};
      for (std::size_t i = 0; i < n; ++i) report.offendingX.push_back(k[i]);
      return {std::nullopt, std::move(report)};
    }
    for (const auto& [k, c] : top) {
      std::size_t i = n;
      for (auto cand : order) {
        if (k[kMaxVariablePairs + cand] != 0) {
          i = cand;
          break;
        }
      }
      ZXKey reduced = k;
      --reduced[kMaxVariablePairs + i];
      q[i].add(reduced, -c);
      rest.add(k, -c);
      if (k[i] != 0) {
        ZXKey lowered = reduced;
        --lowered[i];
        rest.add(lowered, c * Zp<P>(static_cast<unsigned>(k[i])));
      }
    }
  }
  ImDCertificate<P> cert{std::move(q)};
  if (!cert.certifies(b)) throw std::logic_error("imDDecide: certificate does not reconstruct its input");
  return {std::move(cert), std::nullopt};
}

template <std::uint32_t P>
ImDDecision<P> imDDecide(const ZXPoly<P>& b, const ImagepLimits& limits = {}) {
  return imDDecide(b, detail::identityOrder(b.pairs()), limits);
}

/// Sufficient test: if every monomial has some zeta_i exponent >= P (b has
/// coefficients in J = (zeta_1^P..zeta_n^P)), assembles the certificate from
/// zeta_i^P u = (d_i - zeta_i)^P (-u). nullopt is not a disproof.
template <std::uint32_t P>
std::optional<ImDCertificate<P>> jIdealWitness(const ZXPoly<P>& b) {
  const std::size_t n = b.pairs();
  std::vector<ZXPoly<P>> q(n, ZXPoly<P>(n));
  for (const auto& [k, c] : b.terms()) {
    std::size_t i = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (k[kMaxVariablePairs + j] >= P) {
        i = j;
        break;
      }
    }
    if (i == n) return std::nullopt;
    ZXKey reduced = k;
    reduced[kMaxVariablePairs + i] = static_cast<std::uint8_t>(reduced[kMaxVariablePairs + i] - P);
    ZXPoly<P> piece(n);
    piece.add(reduced, -c);
    for (std::uint32_t s = 1; s < P; ++s) piece = applyD(i, piece);
    q[i] += piece;
  }
  ImDCertificate<P> cert{std::move(q)};
  if (!cert.certifies(b)) throw std::logic_error("jIdealWitness: certificate does not reconstruct its input");
  return cert;
}

/// Groups the terms of f by x-exponent: f = sum_a f_a x^a with f_a in F_p[zeta].
template <std::uint32_t P>
std::map<std::vector<unsigned>, ZXPoly<P>> xCoefficients(const ZXPoly<P>& f) {
  std::map<std::vector<unsigned>, ZXPoly<P>> out;
  for (const auto& [k, c] : f.terms()) {
    std::vector<unsigned> a(f.pairs());
    ZXKey zetaOnly = k;
    for (std::size_t i = 0; i < f.pairs(); ++i) {
      a[i] = k[i];
      zetaOnly[i] = 0;
    }
    out.try_emplace(a, f.pairs()).first->second.add(zetaOnly, c);
  }
  return out;
}

/// A zeta-polynomial lies in I = (zeta_1..zeta_n) iff its constant term is 0.
template <std::uint32_t P>
bool inZetaIdeal(const ZXPoly<P>& zetaPoly) {
  return zetaPoly.coeff(ZXKey{}).isZero();
}

template <std::uint32_t P>
struct CorollaryReport {
  ImDDecision<P> powerDecision;  ///< decision for f^P
  /// x-exponents a with f_a not in I although f^P is in ImD (expected empty).
  std::vector<std::vector<unsigned>> counterexamples;
};

/// Decides f^P and, when it is a member, checks that every x-coefficient f_a
/// of f has f_a^P in I (equivalently f_a in I).
template <std::uint32_t P>
CorollaryReport<P> corollaryCheck(const ZXPoly<P>& f, const ImagepLimits& limits = {}) {
  CorollaryReport<P> report{imDDecide(f.pow(P), limits), {}};
  if (!report.powerDecision.isMember()) return report;
  for (const auto& [a, fa] : xCoefficients(f)) {
    if (!inZetaIdeal(fa.pow(P))) report.counterexamples.push_back(a);
  }
  return report;
}

template <std::uint32_t P>
struct CharPTheoremReport {
  ImDDecision<P> hypothesis;  ///< decision for f^P
  std::optional<ImDDecision<P>> atPSquared;       ///< decision for g f^(P^2)
  std::optional<ImDDecision<P>> atPSquaredPlus1;  ///< decision for g f^(P^2 + 1)
  bool jIdealAtPSquared = false;  ///< every coefficient of g f^(P^2) lies in J
  bool jIdealAtPSquaredPlus1 = false;

  bool hypothesisHolds() const { return hypothesis.isMember(); }
  bool conclusionHolds() const {
    return atPSquared && atPSquared->isMember() && atPSquaredPlus1 && atPSquaredPlus1->isMember();
  }
};

/// If f^P is in ImD, checks g f^m in ImD for m = P^2 and P^2 + 1.
template <std::uint32_t P>
CharPTheoremReport<P> charPTheoremCheck(const ZXPoly<P>& f, const ZXPoly<P>& g, const ImagepLimits& limits = {}) {
  CharPTheoremReport<P> report{imDDecide(f.pow(P), limits), std::nullopt, std::nullopt};
  if (!report.hypothesisHolds()) return report;
  const std::size_t m = std::size_t{P} * P;
  const long projected = std::max(0L, g.totalDegree()) + static_cast<long>(m + 1) * f.totalDegree();
  if (projected > static_cast<long>(limits.maxTotalDegree)) {
    throw DomainError("charPTheoremCheck: g f^" + std::to_string(m + 1) + " would have total degree " +
                      std::to_string(projected) + " above the cap of " + std::to_string(limits.maxTotalDegree));
  }
  ZXPoly<P> power = f.pow(m);
  ZXPoly<P> b1 = g * power;
  ZXPoly<P> b2 = b1 * f;
  report.atPSquared = imDDecide(b1, limits);
  report.atPSquaredPlus1 = imDDecide(b2, limits);
  report.jIdealAtPSquared = jIdealWitness(b1).has_value();
  report.jIdealAtPSquaredPlus1 = jIdealWitness(b2).has_value();
  return report;
}

}  // namespace mz
