#pragma once

/**
 * @file upoly.hpp
 * @brief Dense univariate polynomials over a field, Laurent polynomials, root
 *        data, and the evaluation maps used by moment functionals:
 *        substitution g -> g(lambda), P(d/dt) and P(t d/dt).
 */

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "mz/error.hpp"
#include "mz/scalars.hpp"

namespace mz {

/// Degree of the zero polynomial.
inline constexpr long kNegInfDegree = std::numeric_limits<long>::min();

template <Field F>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<F> coefficients) : coeffs_(std::move(coefficients)) { trim(); }
  Poly(std::initializer_list<F> coefficients) : coeffs_(coefficients) { trim(); }

  static Poly constant(const F& c) { return Poly(std::vector<F>{c}); }
  static Poly monomial(const F& c, std::size_t exponent) {
    std::vector<F> v(exponent + 1, F(0));
    v[exponent] = c;
    return Poly(std::move(v));
  }
  /// The polynomial t.
  static Poly t() { return monomial(F(1), 1); }
  /// t - a
  static Poly linear(const F& a) { return Poly({-a, F(1)}); }

  long degree() const { return coeffs_.empty() ? kNegInfDegree : static_cast<long>(coeffs_.size()) - 1; }
  bool isZero() const { return coeffs_.empty(); }
  /// Number of stored coefficients (degree + 1, or 0 for the zero polynomial).
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<F>& coefficients() const { return coeffs_; }

  F coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : F(0); }
  const F& leading() const {
    if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  Poly monic() const {
    if (isZero()) return *this;
    F inv = F(1) / leading();
    return *this * inv;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), F(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), F(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const F& s) {
    if (s.isZero()) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const F& s) { return a *= s; }
  friend Poly operator*(const F& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.isZero() || b.isZero()) return {};
    std::vector<F> out(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].isZero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Multiplication by t^k.
  Poly shifted(std::size_t k) const {
    if (isZero()) return *this;
    std::vector<F> v(k, F(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(v));
  }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<F> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * F(static_cast<long>(i));
    return Poly(std::move(v));
  }

  Poly pow(std::size_t e) const {
    Poly result = constant(F(1));
    Poly base = *this;
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
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      if (coeffs_[i].isZero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + coeffs_[i].toString() + ")";
      if (i >= 1) s += "*t";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }
  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.toString(); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().isZero()) coeffs_.pop_back();
  }

  std::vector<F> coeffs_;
};

/// Quotient and remainder: a = q*b + r with deg r < deg b.
template <Field F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
  if (b.isZero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<F>{}, a};
  std::vector<F> rem = a.coefficients();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<F> quot(rem.size() - db, F(0));
  F invLead = F(1) / b.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    F c = rem[k + db] * invLead;
    quot[k] = c;
    if (c.isZero()) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= c * b.coeff(j);
  }
  rem.resize(db);
  return {Poly<F>(std::move(quot)), Poly<F>(std::move(rem))};
}

template <Field F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b) {
  return divmod(a, b).second;
}

template <Field F>
Poly<F> operator/(const Poly<F>& a, const Poly<F>& b) {
  return divmod(a, b).first;
}

template <Field F>
bool divides(const Poly<F>& d, const Poly<F>& a) {
  return (a % d).isZero();
}

template <Field F>
struct ExtendedGcd {
  Poly<F> u;
  Poly<F> v;
  Poly<F> g;  ///< monic
};

/// Bezout data u*a + v*b = g with g the monic gcd.
template <Field F>
ExtendedGcd<F> extendedGcd(const Poly<F>& a, const Poly<F>& b) {
  if (a.isZero() && b.isZero()) throw DomainError("extendedGcd: both inputs are zero");
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0 = Poly<F>::constant(F(1)), s1;
  Poly<F> t0, t1 = Poly<F>::constant(F(1));
  while (!r1.isZero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  F inv = F(1) / r0.leading();
  return {s0 * inv, t0 * inv, r0 * inv};
}

/// Substitution map g -> g(lambda).
template <Field F>
F evalAt(const Poly<F>& g, const F& lambda) {
  F acc(0);
  const auto& c = g.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * lambda + c[i];
  return acc;
}

/// Horner evaluation of g at an element of any ring that supports + and *
/// with scalars from F; `one` is the ring's unit.
template <Field F, typename R>
R evalIn(const Poly<F>& g, const R& x, const R& one) {
  R acc = one * F(0);
  const auto& c = g.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + one * c[i];
  return acc;
}

/// P(d/dt) g = sum_i P_i * g^(i).
template <Field F>
Poly<F> applyDerOp(const Poly<F>& op, const Poly<F>& g) {
  Poly<F> result;
  Poly<F> deriv = g;
  for (std::size_t i = 0; i < op.size() && !deriv.isZero(); ++i) {
    if (!op.coeff(i).isZero()) result += deriv * op.coeff(i);
    deriv = deriv.derivative();
  }
  return result;
}

/// P(D) g with D = t d/dt; D acts diagonally, D(t^n) = n t^n, so the
/// coefficient of t^n is scaled by P(n).
template <Field F>
Poly<F> applyEulerOp(const Poly<F>& op, const Poly<F>& g) {
  std::vector<F> out(g.size(), F(0));
  for (std::size_t n = 0; n < g.size(); ++n) {
    if (g.coeff(n).isZero()) continue;
    out[n] = evalAt(op, F(static_cast<long>(n))) * g.coeff(n);
  }
  return Poly<F>(std::move(out));
}

// ---------------------------------------------------------------------------
// Root data
// ---------------------------------------------------------------------------

template <Field F>
struct Root {
  F value;
  std::size_t multiplicity = 1;

  friend bool operator==(const Root&, const Root&) = default;
};

/// Distinct roots with multiplicities, in a fixed user-visible order.
template <Field F>
class RootData {
 public:
  RootData() = default;
  explicit RootData(std::vector<Root<F>> roots) : roots_(std::move(roots)) {
    for (std::size_t i = 0; i < roots_.size(); ++i) {
      if (roots_[i].multiplicity == 0) {
        throw DomainError("root " + roots_[i].value.toString() + " has multiplicity 0");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (roots_[j].value == roots_[i].value) {
          throw DomainError("duplicate root " + roots_[i].value.toString());
        }
      }
    }
  }

  std::size_t size() const { return roots_.size(); }
  bool empty() const { return roots_.empty(); }
  const Root<F>& operator[](std::size_t i) const { return roots_[i]; }
  auto begin() const { return roots_.begin(); }
  auto end() const { return roots_.end(); }
  const std::vector<Root<F>>& roots() const { return roots_; }

  std::optional<std::size_t> indexOf(const F& lambda) const {
    for (std::size_t i = 0; i < roots_.size(); ++i) {
      if (roots_[i].value == lambda) return i;
    }
    return std::nullopt;
  }

  /// Sum of multiplicities.
  std::size_t totalMultiplicity() const {
    std::size_t n = 0;
    for (const auto& r : roots_) n += r.multiplicity;
    return n;
  }

  /// prod (t - lambda)^m(lambda)
  Poly<F> modulus() const {
    Poly<F> f = Poly<F>::constant(F(1));
    for (const auto& r : roots_) f *= Poly<F>::linear(r.value).pow(r.multiplicity);
    return f;
  }

  /// prod (t - lambda), the generator of the radical of (modulus()).
  Poly<F> reducedModulus() const {
    Poly<F> f = Poly<F>::constant(F(1));
    for (const auto& r : roots_) f *= Poly<F>::linear(r.value);
    return f;
  }

  friend bool operator==(const RootData&, const RootData&) = default;

 private:
  std::vector<Root<F>> roots_;
};

// ---------------------------------------------------------------------------
// Rational roots
// ---------------------------------------------------------------------------

/// Outcome of splitting a rational polynomial into linear factors over Q.
struct RationalSplitting {
  RootData<Rational> roots;    ///< all rational roots found, ascending
  Poly<Rational> unsplitFactor;  ///< monic cofactor without rational roots
  bool splits() const { return unsplitFactor.degree() == 0; }
};

namespace detail {

inline std::vector<mpz_class> positiveDivisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, unsigned>> factors;
  for (mpz_class d = 2; d * d <= n; ++d) {
    if (d > 10'000'000) throw DomainError("rationalRoots: coefficient too large to factor by trial division");
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e != 0) factors.emplace_back(d, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<mpz_class> divs{1};
  for (const auto& [prime, e] : factors) {
    std::size_t count = divs.size();
    mpz_class power = 1;
    for (unsigned k = 1; k <= e; ++k) {
      power *= prime;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * power);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace detail

/// All rational roots of f with multiplicities (rational root theorem on the
/// primitive integer form, multiplicities by repeated division).
inline RationalSplitting rationalRoots(const Poly<Rational>& f) {
  if (f.isZero()) throw DomainError("rationalRoots: zero polynomial");
  std::vector<Root<Rational>> found;
  Poly<Rational> rest = f.monic();

  std::size_t zeroMult = 0;
  while (rest.degree() > 0 && rest.coeff(0).isZero()) {
    rest = rest / Poly<Rational>::t();
    ++zeroMult;
  }
  if (zeroMult != 0) found.push_back({Rational(0), zeroMult});

  if (rest.degree() > 0) {
    mpz_class lcm = 1;
    for (const auto& c : rest.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
    mpz_class lead = (rest.leading() * Rational(lcm)).numerator();
    mpz_class tail = (rest.coeff(0) * Rational(lcm)).numerator();
    auto numerators = detail::positiveDivisors(tail);
    auto denominators = detail::positiveDivisors(lead);
    for (const auto& q : denominators) {
      for (const auto& p : numerators) {
        if (gcd(p, q) != 1) continue;
        for (int sign : {1, -1}) {
          if (rest.degree() <= 0) break;
          Rational candidate(mpq_class(mpz_class(sign * p), q));
          std::size_t mult = 0;
          while (rest.degree() > 0 && evalAt(rest, candidate).isZero()) {
            rest = rest / Poly<Rational>::linear(candidate);
            ++mult;
          }
          if (mult != 0) found.push_back({candidate, mult});
        }
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
  return {RootData<Rational>(std::move(found)), rest.monic()};
}

// ---------------------------------------------------------------------------
// Laurent polynomials
// ---------------------------------------------------------------------------

/// Finite sum of c_i t^i with i in Z; zero coefficients are never stored.
template <Field F>
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const std::map<long, F>& terms) {
    for (const auto& [e, c] : terms) add(e, c);
  }

  const std::map<long, F>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  F coeff(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? F(0) : it->second;
  }

  void add(long e, const F& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.isZero()) terms_.erase(it);
    }
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    for (const auto& [e, c] : b.terms_) a.add(e, c);
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) r.add(ea + eb, ca * cb);
    }
    return r;
  }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::map<long, F> terms_;
};

}  // namespace mz
