#pragma once

// Shorthand constructors for test data.

#include <initializer_list>
#include <string>
#include <vector>

#include "mz/upoly.hpp"

namespace mz::test {

inline Rational q(const char* text) { return Rational::parse(text); }

/// Coefficient list, lowest degree first: poly({"1", "0", "-1/2"}) = 1 - t^2/2.
inline Poly<Rational> poly(std::initializer_list<const char*> coeffs) {
  std::vector<Rational> c;
  for (const char* s : coeffs) c.push_back(Rational::parse(s));
  return Poly<Rational>(std::move(c));
}

inline RootData<Rational> roots(std::initializer_list<std::pair<const char*, std::size_t>> list) {
  std::vector<Root<Rational>> r;
  for (const auto& [v, m] : list) r.push_back({Rational::parse(v), m});
  return RootData<Rational>(std::move(r));
}

}  // namespace mz::test
