#pragma once

/**
 * @file probes.hpp
 * @brief Executable small examples of MZ-spaces and bounded probes:
 *        trace-zero matrices, images of t d/dt + lambda/t on Laurent
 *        polynomials, and vanishing-conjecture probes for constant-coefficient
 *        differential operators.
 */

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mz/error.hpp"
#include "mz/linalg.hpp"
#include "mz/upoly.hpp"

namespace mz {

using MatrixQ = Matrix<Rational>;

// ---------------------------------------------------------------------------
// Trace form on n x n matrices
// ---------------------------------------------------------------------------

struct TraceReport {
  bool inRadical = false;
  std::vector<Rational> traces;  ///< Tr(C^m), m = 1..n
  std::optional<std::size_t> nilpotencyWitness;  ///< least k with C^k = 0
};

/// C lies in the radical of the trace-zero subspace iff Tr(C^m) = 0 for
/// m = 1..n, i.e. iff C is nilpotent (Newton's identities, char 0).
inline TraceReport traceRadicalTest(const MatrixQ& c) {
  if (c.rows() != c.cols() || c.rows() == 0) throw DomainError("traceRadicalTest: need a nonempty square matrix");
  const std::size_t n = c.rows();
  TraceReport report;
  MatrixQ power = c;
  std::vector<MatrixQ> powers;
  for (std::size_t m = 1; m <= n; ++m) {
    report.traces.push_back(power.trace());
    powers.push_back(power);
    power = power * c;
  }
  report.inRadical = true;
  for (const auto& t : report.traces) report.inRadical = report.inRadical && t.isZero();
  if (report.inRadical) {
    for (std::size_t k = 0; k < n; ++k) {
      if (powers[k].isZero()) {
        report.nilpotencyWitness = k + 1;
        break;
      }
    }
    if (!report.nilpotencyWitness) throw std::logic_error("traceRadicalTest: traces vanish but C^n != 0");
  }
  return report;
}

/// det(tI - C), computed by evaluating the determinant at n+1 integer points
/// and interpolating; independent of traces and matrix powers.
inline Poly<Rational> characteristicPolynomial(const MatrixQ& c) {
  if (c.rows() != c.cols()) throw DomainError("characteristicPolynomial: matrix must be square");
  const std::size_t n = c.rows();
  Poly<Rational> result;
  for (std::size_t k = 0; k <= n; ++k) {
    Rational xk(static_cast<long>(k));
    MatrixQ shifted = MatrixQ::identity(n) * xk + c * Rational(-1);
    Rational value = determinant(shifted);
    Poly<Rational> basis = Poly<Rational>::constant(value);
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == k) continue;
      Rational xj(static_cast<long>(j));
      basis = basis * Poly<Rational>::linear(xj) * (Rational(1) / (xk - xj));
    }
    result += basis;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Laurent polynomials under D_lambda = d/dt + lambda t^-1
// ---------------------------------------------------------------------------

using LaurentQ = LaurentPoly<Rational>;

/// D_lambda(t^i) = (lambda + i) t^(i-1).
inline LaurentQ applyDLambda(const Rational& lambda, const LaurentQ& h) {
  LaurentQ out;
  for (const auto& [e, c] : h.terms()) out.add(e - 1, c * (lambda + Rational(e)));
  return out;
}

/// g in Im D_lambda: always when lambda is not an integer; for lambda = m in Z
/// exactly when the coefficient of t^(-m-1) vanishes.
inline bool laurentImageMembership(const Rational& lambda, const LaurentQ& g) {
  if (!lambda.isInteger()) return true;
  long m = lambda.numerator().get_si();
  return g.coeff(-m - 1).isZero();
}

/// An explicit h with D_lambda(h) = g, or nullopt when g is not in the image.
inline std::optional<LaurentQ> laurentPreimage(const Rational& lambda, const LaurentQ& g) {
  if (!laurentImageMembership(lambda, g)) return std::nullopt;
  LaurentQ h;
  for (const auto& [e, c] : g.terms()) h.add(e + 1, c / (lambda + Rational(e + 1)));
  return h;
}

/// Im D_lambda is an MZ-space of k[t, 1/t] iff lambda is not an integer or
/// lambda = -1.
inline bool laurentMZClass(const Rational& lambda) { return !lambda.isInteger() || lambda == Rational(-1); }

/// r(V_{-1}) = t k[t] union t^-1 k[t^-1].
inline bool radicalVminus1Membership(const LaurentQ& g) {
  bool allPositive = true;
  bool allNegative = true;
  for (const auto& [e, c] : g.terms()) {
    allPositive = allPositive && e > 0;
    allNegative = allNegative && e < 0;
  }
  return allPositive || allNegative;
}

// ---------------------------------------------------------------------------
// Multivariate polynomials and constant-coefficient operators
// ---------------------------------------------------------------------------

/// Sparse polynomial over Q in n variables; zero coefficients never stored.
class MultiPolyQ {
 public:
  using Exponent = std::vector<unsigned>;

  explicit MultiPolyQ(std::size_t vars = 0) : vars_(vars) {}

  static MultiPolyQ constant(std::size_t vars, const Rational& c) {
    MultiPolyQ p(vars);
    p.add(Exponent(vars, 0), c);
    return p;
  }
  static MultiPolyQ variable(std::size_t vars, std::size_t index) {
    Exponent e(vars, 0);
    e.at(index) = 1;
    MultiPolyQ p(vars);
    p.add(e, Rational(1));
    return p;
  }

  std::size_t vars() const { return vars_; }
  bool isZero() const { return terms_.empty(); }
  const std::map<Exponent, Rational>& terms() const { return terms_; }

  void add(const Exponent& e, const Rational& c) {
    if (e.size() != vars_) throw DomainError("multivariate term has the wrong number of variables");
    if (c.isZero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.isZero()) terms_.erase(it);
    }
  }

  friend MultiPolyQ operator+(MultiPolyQ a, const MultiPolyQ& b) {
    a.checkVars(b);
    for (const auto& [e, c] : b.terms_) a.add(e, c);
    return a;
  }
  friend MultiPolyQ operator-(MultiPolyQ a, const MultiPolyQ& b) {
    a.checkVars(b);
    for (const auto& [e, c] : b.terms_) a.add(e, -c);
    return a;
  }
  friend MultiPolyQ operator*(const MultiPolyQ& a, const MultiPolyQ& b) {
    a.checkVars(b);
    MultiPolyQ r(a.vars_);
    Exponent e(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < a.vars_; ++i) e[i] = ea[i] + eb[i];
        r.add(e, ca * cb);
      }
    }
    return r;
  }
  friend MultiPolyQ operator*(MultiPolyQ a, const Rational& s) {
    if (s.isZero()) return MultiPolyQ(a.vars_);
    for (auto& [e, c] : a.terms_) c *= s;
    return a;
  }
  friend bool operator==(const MultiPolyQ&, const MultiPolyQ&) = default;

  MultiPolyQ pow(std::size_t e) const {
    MultiPolyQ result = constant(vars_, Rational(1));
    for (std::size_t i = 0; i < e; ++i) result = result * *this;
    return result;
  }

 private:
  void checkVars(const MultiPolyQ& o) const {
    if (vars_ != o.vars_) throw DomainError("multivariate polynomials with different variable counts");
  }

  std::size_t vars_;
  std::map<Exponent, Rational> terms_;
};

/// A polynomial in the formal symbols d/dx_1, ..., d/dx_n.
struct ConstCoeffOp {
  MultiPolyQ symbol;

  static ConstCoeffOp laplacian(std::size_t n) {
    MultiPolyQ s(n);
    for (std::size_t i = 0; i < n; ++i) {
      MultiPolyQ::Exponent e(n, 0);
      e[i] = 2;
      s.add(e, Rational(1));
    }
    return {s};
  }

  ConstCoeffOp pow(std::size_t m) const { return {symbol.pow(m)}; }
};

/// Lambda(f), termwise: d^beta x^alpha = prod alpha_i!/(alpha_i-beta_i)! x^(alpha-beta).
inline MultiPolyQ applyOp(const ConstCoeffOp& op, const MultiPolyQ& f) {
  if (op.symbol.vars() != f.vars()) {
    throw DomainError("applyOp: operator has " + std::to_string(op.symbol.vars()) + " variables, polynomial has " +
                      std::to_string(f.vars()));
  }
  const std::size_t n = f.vars();
  MultiPolyQ out(n);
  MultiPolyQ::Exponent e(n);
  for (const auto& [beta, cop] : op.symbol.terms()) {
    for (const auto& [alpha, cf] : f.terms()) {
      mpz_class factor = 1;
      bool vanishes = false;
      for (std::size_t i = 0; i < n && !vanishes; ++i) {
        if (beta[i] > alpha[i]) {
          vanishes = true;
          break;
        }
        for (unsigned k = alpha[i] - beta[i] + 1; k <= alpha[i]; ++k) factor *= k;
        e[i] = alpha[i] - beta[i];
      }
      if (!vanishes) out.add(e, cop * cf * Rational(factor));
    }
  }
  return out;
}

struct GvcProbeReport {
  std::size_t mMax = 0;
  std::vector<std::size_t> hypothesisViolations;  ///< m with Lambda^m(P^m) != 0
  std::vector<std::size_t> conclusionFailures;    ///< m with Lambda^m(Q P^m) != 0
  /// Least m0 such that Lambda^m(Q P^m) = 0 for every m0 <= m <= mMax.
  std::optional<std::size_t> conclusionTransition;
};

/// Records, for m = 1..mMax, whether Lambda^m(P^m) = 0 and whether
/// Lambda^m(Q P^m) = 0. A bounded probe, never a statement about all m.
inline GvcProbeReport gvcProbe(const ConstCoeffOp& op, const MultiPolyQ& p, const MultiPolyQ& q, std::size_t mMax) {
  if (mMax == 0) throw DomainError("gvcProbe: mMax must be at least 1");
  if (op.symbol.vars() != p.vars() || p.vars() != q.vars()) throw DomainError("gvcProbe: variable count mismatch");
  GvcProbeReport report;
  report.mMax = mMax;
  ConstCoeffOp opPower{MultiPolyQ::constant(p.vars(), Rational(1))};
  MultiPolyQ pPower = MultiPolyQ::constant(p.vars(), Rational(1));
  std::size_t transition = 1;
  for (std::size_t m = 1; m <= mMax; ++m) {
    opPower.symbol = opPower.symbol * op.symbol;
    pPower = pPower * p;
    if (!applyOp(opPower, pPower).isZero()) report.hypothesisViolations.push_back(m);
    if (!applyOp(opPower, q * pPower).isZero()) {
      report.conclusionFailures.push_back(m);
      transition = m + 1;
    }
  }
  if (transition <= mMax) report.conclusionTransition = transition;
  return report;
}

}  // namespace mz
