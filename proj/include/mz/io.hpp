#pragma once

/**
 * @file io.hpp
 * @brief JSON encodings of the library's values.
 *
 * Rationals are canonical "num/den" strings ("3" for integers). Polynomials
 * are arrays indexed by exponent; Laurent polynomials map exponent strings to
 * coefficients; a subspace spec is
 * { "functionals": [ {"P0": [...], "parts": {"lambda": [...]}} ], "roots": [["lambda", m], ...] }.
 * ZXPoly is a list of {"zeta": [...], "x": [...], "c": residue}.
 */

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "mz/certificates.hpp"
#include "mz/error.hpp"
#include "mz/functionals.hpp"
#include "mz/imagep.hpp"
#include "mz/mzdecide.hpp"
#include "mz/probes.hpp"
#include "mz/quotient.hpp"

namespace mz::io {

using json = nlohmann::json;

namespace detail {

inline const json& field(const json& obj, const char* key, const char* context) {
  if (!obj.is_object()) throw DomainError(std::string(context) + ": expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw DomainError(std::string(context) + ": missing field \"" + key + "\"");
  return *it;
}

inline const json& array(const json& v, const char* context) {
  if (!v.is_array()) throw DomainError(std::string(context) + ": expected a JSON array");
  return v;
}

inline unsigned nonNegative(const json& v, const char* context) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw DomainError(std::string(context) + ": expected a non-negative integer");
  }
  return v.get<unsigned>();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Rationals and univariate polynomials
// ---------------------------------------------------------------------------

inline json toJson(const Rational& q) { return q.toString(); }

inline Rational rationalFromJson(const json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw DomainError("expected a rational as a \"num/den\" string or an integer");
}

inline json toJson(const Poly<Rational>& p) {
  json arr = json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.toString());
  return arr;
}

inline Poly<Rational> polyFromJson(const json& v) {
  std::vector<Rational> coeffs;
  for (const auto& c : detail::array(v, "polynomial")) coeffs.push_back(rationalFromJson(c));
  return Poly<Rational>(std::move(coeffs));
}

inline json toJson(const LaurentQ& g) {
  json obj = json::object();
  for (const auto& [e, c] : g.terms()) obj[std::to_string(e)] = c.toString();
  return obj;
}

inline LaurentQ laurentFromJson(const json& v) {
  if (!v.is_object()) throw DomainError("Laurent polynomial: expected an object from exponent to coefficient");
  LaurentQ g;
  for (const auto& [key, value] : v.items()) {
    long e = 0;
    try {
      std::size_t used = 0;
      e = std::stol(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw DomainError("Laurent polynomial: exponent \"" + key + "\" is not an integer");
    }
    g.add(e, rationalFromJson(value));
  }
  return g;
}

inline json toJson(const RootData<Rational>& roots) {
  json arr = json::array();
  for (const auto& r : roots) arr.push_back(json::array({r.value.toString(), r.multiplicity}));
  return arr;
}

inline RootData<Rational> rootDataFromJson(const json& v) {
  std::vector<Root<Rational>> roots;
  for (const auto& entry : detail::array(v, "roots")) {
    if (!entry.is_array() || entry.size() != 2) throw DomainError("roots: each entry must be [\"lambda\", multiplicity]");
    roots.push_back({rationalFromJson(entry[0]), detail::nonNegative(entry[1], "root multiplicity")});
  }
  return RootData<Rational>(std::move(roots));
}

// ---------------------------------------------------------------------------
// Functionals and subspace specs
// ---------------------------------------------------------------------------

inline json toJson(const FunctionalNF<Rational>& L) {
  json parts = json::object();
  for (std::size_t i = 0; i < L.rootData().size(); ++i) {
    const auto& lambda = L.rootData()[i].value;
    if (lambda.isZero() || L.operatorAt(i).isZero()) continue;
    parts[lambda.toString()] = toJson(L.operatorAt(i));
  }
  return {{"P0", toJson(L.p0())}, {"parts", parts}};
}

/// Reads a functional relative to `roots`; roots absent from the JSON get a
/// zero operator polynomial.
inline FunctionalNF<Rational> functionalFromJson(const json& v, const RootData<Rational>& roots) {
  if (!v.is_object()) throw DomainError("functional: expected an object with \"P0\" and \"parts\"");
  std::vector<Poly<Rational>> ops(roots.size());
  if (auto it = v.find("P0"); it != v.end()) {
    Poly<Rational> p0 = polyFromJson(*it);
    auto zero = roots.indexOf(Rational(0));
    if (!p0.isZero()) {
      if (!zero) throw DomainError("functional: P0 is nonzero but 0 is not among the roots");
      ops[*zero] = p0;
    }
  }
  if (auto it = v.find("parts"); it != v.end()) {
    if (!it->is_object()) throw DomainError("functional: \"parts\" must map roots to polynomials");
    for (const auto& [key, value] : it->items()) {
      Rational lambda = Rational::parse(key);
      if (lambda.isZero()) throw DomainError("functional: the root 0 belongs in \"P0\", not in \"parts\"");
      auto idx = roots.indexOf(lambda);
      if (!idx) throw DomainError("functional: part for " + key + " which is not among the roots");
      ops[*idx] = polyFromJson(value);
    }
  }
  return FunctionalNF<Rational>(roots, std::move(ops));
}

inline json toJson(const SubspaceSpec<Rational>& spec) {
  json fs = json::array();
  for (const auto& L : spec.functionals) fs.push_back(toJson(L));
  return {{"functionals", fs}, {"roots", toJson(spec.rootData())}};
}

inline SubspaceSpec<Rational> specFromJson(const json& v) {
  RootData<Rational> roots = rootDataFromJson(detail::field(v, "roots", "spec"));
  SubspaceSpec<Rational> spec;
  for (const auto& f : detail::array(detail::field(v, "functionals", "spec"), "functionals")) {
    spec.functionals.push_back(functionalFromJson(f, roots));
  }
  if (spec.functionals.empty()) throw DomainError("spec: at least one functional is required");
  return spec;
}

inline json toJson(const MZVerdict<Rational>& verdict, const RootData<Rational>& roots) {
  json out = {{"isMZ", verdict.isMZ}};
  if (verdict.witnessSubset) {
    json subset = json::array();
    for (auto i : *verdict.witnessSubset) subset.push_back(roots[i].value.toString());
    out["witnessSubset"] = subset;
  }
  if (verdict.witnessIdempotent) out["witnessIdempotent"] = toJson(*verdict.witnessIdempotent);
  if (verdict.witnessMultiplier) out["witnessMultiplier"] = toJson(*verdict.witnessMultiplier);
  if (!verdict.witnessValue.empty()) {
    json value = json::array();
    for (const auto& x : verdict.witnessValue) value.push_back(x.toString());
    out["witnessValue"] = value;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Certificates and probes
// ---------------------------------------------------------------------------

inline json toJson(const PAdicCertificate& cert) {
  return {{"rule", toString(cert.rule)},
          {"p", cert.p},
          {"m", cert.m},
          {"valuation", cert.claimedValuation},
          {"value", cert.verifiedValue.toString()}};
}

inline json toJson(const MatrixQ& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).toString());
    rows.push_back(row);
  }
  return rows;
}

inline MatrixQ matrixFromJson(const json& v) {
  const auto& rows = detail::array(v, "matrix");
  const std::size_t n = rows.size();
  if (n == 0) throw DomainError("matrix: must be nonempty");
  MatrixQ m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& row = detail::array(rows[r], "matrix row");
    if (row.size() != n) throw DomainError("matrix: must be square");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rationalFromJson(row[c]);
  }
  return m;
}

inline json toJson(const MultiPolyQ& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"c", c.toString()}});
  return {{"n", p.vars()}, {"terms", terms}};
}

inline MultiPolyQ multiPolyFromJson(const json& v) {
  const std::size_t n = detail::nonNegative(detail::field(v, "n", "multivariate polynomial"), "n");
  MultiPolyQ p(n);
  for (const auto& t : detail::array(detail::field(v, "terms", "multivariate polynomial"), "terms")) {
    MultiPolyQ::Exponent e;
    for (const auto& x : detail::array(detail::field(t, "exp", "term"), "exp")) e.push_back(detail::nonNegative(x, "exponent"));
    p.add(e, rationalFromJson(detail::field(t, "c", "term")));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Characteristic p
// ---------------------------------------------------------------------------

template <std::uint32_t P>
json toJson(const ZXPoly<P>& f) {
  json terms = json::array();
  for (const auto& [k, c] : f.terms()) {
    std::vector<unsigned> zeta(f.pairs()), x(f.pairs());
    for (std::size_t i = 0; i < f.pairs(); ++i) {
      x[i] = k[i];
      zeta[i] = k[kMaxVariablePairs + i];
    }
    terms.push_back({{"zeta", zeta}, {"x", x}, {"c", c.residue()}});
  }
  return terms;
}

template <std::uint32_t P>
ZXPoly<P> zxPolyFromJson(const json& v, std::size_t pairs) {
  ZXPoly<P> f(pairs);
  for (const auto& t : detail::array(v, "ZXPoly")) {
    std::vector<unsigned> zeta, x;
    for (const auto& e : detail::array(detail::field(t, "zeta", "ZXPoly term"), "zeta")) zeta.push_back(detail::nonNegative(e, "zeta exponent"));
    for (const auto& e : detail::array(detail::field(t, "x", "ZXPoly term"), "x")) x.push_back(detail::nonNegative(e, "x exponent"));
    if (zeta.size() != pairs || x.size() != pairs) {
      throw DomainError("ZXPoly term: \"zeta\" and \"x\" must each have n = " + std::to_string(pairs) + " entries");
    }
    const json& c = detail::field(t, "c", "ZXPoly term");
    if (!c.is_number_integer()) throw DomainError("ZXPoly term: \"c\" must be an integer residue");
    f.add(ZXPoly<P>::makeKey(zeta, x), Zp<P>(c.get<long long>()));
  }
  return f;
}

template <std::uint32_t P>
json toJson(const ImDCertificate<P>& cert) {
  json pre = json::array();
  for (const auto& q : cert.preimages) pre.push_back(toJson(q));
  return {{"preimages", pre}};
}

template <std::uint32_t P>
json toJson(const ObstructionReport<P>& report) {
  json partial = json::array();
  for (const auto& q : report.partialPreimages) partial.push_back(toJson(q));
  return {{"xDegree", report.xDegree},
          {"offendingX", report.offendingX},
          {"coefficient", report.coefficient.residue()},
          {"reduced", toJson(report.reduced)},
          {"partialPreimages", partial}};
}

template <std::uint32_t P>
json toJson(const ImDDecision<P>& decision) {
  json out = {{"member", decision.isMember()}};
  if (decision.certificate) out["certificate"] = toJson(*decision.certificate);
  if (decision.obstruction) out["obstruction"] = toJson(*decision.obstruction);
  return out;
}

}  // namespace mz::io
