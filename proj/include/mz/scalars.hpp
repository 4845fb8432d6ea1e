#pragma once

/**
 * @file scalars.hpp
 * @brief Exact scalars: arbitrary-precision rationals, prime fields Z/pZ and
 *        the p-adic valuation on the rationals.
 *
 * Every algorithm in the library is written against the `Field` concept
 * below, so polynomial code instantiates over `Rational` (characteristic 0)
 * and over `Zp<P>` (characteristic P) alike.
 */

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "mz/error.hpp"

namespace mz {

// ---------------------------------------------------------------------------
// Primality
// ---------------------------------------------------------------------------

namespace detail {

constexpr std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

constexpr std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1U;
  }
  return r;
}

constexpr bool millerRabinWitness(std::uint64_t n, std::uint64_t a) {
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

inline constexpr std::uint64_t kTrialDivisionLimit = 1'000'000;

}  // namespace detail

/// Deterministic primality test: trial division up to 10^6, then
/// Miller-Rabin with the first twelve prime bases (exact for all 64-bit n).
constexpr bool isPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n && d <= detail::kTrialDivisionLimit; ++d) {
    if (n % d == 0) return false;
  }
  if (n <= detail::kTrialDivisionLimit * detail::kTrialDivisionLimit) return true;
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL,
                          37ULL}) {
    if (detail::millerRabinWitness(n, a)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  Rational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }

  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }
  explicit Rational(const mpz_class& v) : value_(v) {}

  /// Parses "a", "a/b" or "-a/b" with optional surrounding whitespace.
  static Rational parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw DomainError("empty rational literal");
    std::string s(text);
    if (s.front() == '+') s.erase(0, 1);
    auto slash = s.find('/');
    auto valid = [](const std::string& part, bool allowSign) {
      std::size_t i = 0;
      if (allowSign && i < part.size() && part[i] == '-') ++i;
      if (i == part.size()) return false;
      for (; i < part.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
      }
      return true;
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid(num, true) || !valid(den, false)) {
      throw DomainError("malformed rational literal '" + std::string(text) + "'");
    }
    mpz_class d(den);
    if (d == 0) throw DomainError("rational with zero denominator: '" + std::string(text) + "'");
    return Rational(mpq_class(mpz_class(num), d));
  }

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool isZero() const { return sgn(value_) == 0; }
  bool isInteger() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Canonical "num/den" form; integers print without a denominator.
  std::string toString() const { return value_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.isZero()) throw DomainError("division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.toString(); }

 private:
  mpq_class value_{0};
};

// ---------------------------------------------------------------------------
// Prime field
// ---------------------------------------------------------------------------

/// Element of Z/PZ. The modulus is part of the type, so mixing residues of
/// different characteristics is a compile error.
template <std::uint32_t P>
class Zp {
  static_assert(isPrime(P), "Zp modulus must be prime");

 public:
  static constexpr std::uint32_t modulus = P;

  constexpr Zp() = default;

  template <std::integral I>
  constexpr Zp(I v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>) {
      long long r = static_cast<long long>(v) % static_cast<long long>(P);
      residue_ = static_cast<std::uint32_t>(r < 0 ? r + P : r);
    } else {
      residue_ = static_cast<std::uint32_t>(static_cast<unsigned long long>(v) % P);
    }
  }

  constexpr std::uint32_t residue() const { return residue_; }
  constexpr bool isZero() const { return residue_ == 0; }

  constexpr Zp operator-() const { return fromResidue(residue_ == 0 ? 0 : P - residue_); }
  constexpr Zp& operator+=(Zp o) {
    std::uint64_t s = std::uint64_t{residue_} + o.residue_;
    residue_ = static_cast<std::uint32_t>(s >= P ? s - P : s);
    return *this;
  }
  constexpr Zp& operator-=(Zp o) { return *this += -o; }
  constexpr Zp& operator*=(Zp o) {
    residue_ = static_cast<std::uint32_t>(std::uint64_t{residue_} * o.residue_ % P);
    return *this;
  }
  constexpr Zp& operator/=(Zp o) { return *this *= o.inverse(); }

  constexpr Zp inverse() const {
    if (residue_ == 0) throw DomainError("division by zero in prime field");
    return fromResidue(static_cast<std::uint32_t>(detail::powmod(residue_, P - 2, P)));
  }

  friend constexpr Zp operator+(Zp a, Zp b) { return a += b; }
  friend constexpr Zp operator-(Zp a, Zp b) { return a -= b; }
  friend constexpr Zp operator*(Zp a, Zp b) { return a *= b; }
  friend constexpr Zp operator/(Zp a, Zp b) { return a /= b; }
  friend constexpr bool operator==(Zp a, Zp b) { return a.residue_ == b.residue_; }

  std::string toString() const { return std::to_string(residue_); }
  friend std::ostream& operator<<(std::ostream& os, Zp z) { return os << z.residue_; }

 private:
  static constexpr Zp fromResidue(std::uint32_t r) {
    Zp z;
    z.residue_ = r;
    return z;
  }

  std::uint32_t residue_ = 0;
};

// ---------------------------------------------------------------------------
// Field concept and traits
// ---------------------------------------------------------------------------

template <typename F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr std::uint32_t characteristic = 0;
};

template <std::uint32_t P>
struct FieldTraits<Zp<P>> {
  static constexpr std::uint32_t characteristic = P;
};

template <typename F>
inline constexpr std::uint32_t characteristic_v = FieldTraits<F>::characteristic;

template <typename F>
concept Field = std::regular<F> && requires(F a, F b) {
  F(0);
  F(1);
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a.isZero() } -> std::convertible_to<bool>;
  { a.toString() } -> std::convertible_to<std::string>;
  FieldTraits<F>::characteristic;
};

template <typename F>
concept CharZeroField = Field<F> && (characteristic_v<F> == 0);

// ---------------------------------------------------------------------------
// p-adic valuation
// ---------------------------------------------------------------------------

/// Exponent of p in a rational; +INF for zero.
class PAdicValue {
 public:
  constexpr PAdicValue() = default;
  constexpr explicit PAdicValue(long v) : finite_(true), value_(v) {}
  static constexpr PAdicValue infinity() { return PAdicValue{}; }

  constexpr bool isInfinite() const { return !finite_; }
  /// Only meaningful when finite.
  constexpr long value() const { return value_; }

  friend constexpr PAdicValue operator+(PAdicValue a, PAdicValue b) {
    if (a.isInfinite() || b.isInfinite()) return infinity();
    return PAdicValue(a.value_ + b.value_);
  }
  friend constexpr bool operator==(PAdicValue a, PAdicValue b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(PAdicValue a, PAdicValue b) {
    if (a.isInfinite() || b.isInfinite()) {
      return a.isInfinite() <=> b.isInfinite();
    }
    return a.value_ <=> b.value_;
  }

  std::string toString() const { return finite_ ? std::to_string(value_) : std::string("inf"); }

  /// |q|_p = p^(-v), as an exact rational; 0 for the infinite valuation.
  Rational absoluteValue(std::uint64_t p) const {
    if (!finite_) return Rational(0);
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), p, static_cast<unsigned long>(value_ < 0 ? -value_ : value_));
    return value_ >= 0 ? Rational(mpq_class(mpz_class(1), power)) : Rational(power);
  }

 private:
  bool finite_ = false;
  long value_ = 0;
};

namespace detail {
inline long removeFactor(mpz_class& n, std::uint64_t p) {
  mpz_class prime(static_cast<unsigned long>(p));
  return static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}
}  // namespace detail

/// v_p(q): q = (a/b) p^n with p dividing neither a nor b.
inline PAdicValue padicValuation(const Rational& q, std::uint64_t p) {
  if (!isPrime(p)) throw DomainError("p-adic valuation requires a prime, got " + std::to_string(p));
  if (q.isZero()) return PAdicValue::infinity();
  mpz_class num = abs(q.numerator());
  mpz_class den = q.denominator();
  return PAdicValue(detail::removeFactor(num, p) - detail::removeFactor(den, p));
}

}  // namespace mz
