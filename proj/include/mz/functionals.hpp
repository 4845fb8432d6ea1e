#pragma once

/**
 * @file functionals.hpp
 * @brief Linear functionals on k[t] that vanish on a nonzero ideal (f).
 *
 * Such a functional is a finite combination
 *
 *     L = S_0 o P_0(d/dt) + sum_{lambda != 0} S_lambda o P_lambda(t d/dt)
 *
 * with deg P_lambda < m(lambda). Its moment sequence a_n = L(t^n) satisfies
 * the linear recurrence with characteristic polynomial f, which is how
 * `fromMoments` recovers the operator polynomials.
 */

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mz/error.hpp"
#include "mz/linalg.hpp"
#include "mz/upoly.hpp"

namespace mz {

/// Normal form of a functional killing (prod (t-lambda)^m(lambda)).
/// `operators[i]` belongs to root i: it is P_0 (acting through d/dt) for the
/// root 0 and P_lambda (acting through t d/dt) for every other root.
template <Field F>
class FunctionalNF {
 public:
  FunctionalNF() = default;
  FunctionalNF(RootData<F> roots, std::vector<Poly<F>> operators)
      : roots_(std::move(roots)), operators_(std::move(operators)) {
    if (operators_.size() != roots_.size()) {
      throw DomainError("functional: expected one operator polynomial per root");
    }
    for (std::size_t i = 0; i < roots_.size(); ++i) {
      if (operators_[i].degree() >= static_cast<long>(roots_[i].multiplicity)) {
        throw DomainError("functional: operator for root " + roots_[i].value.toString() + " has degree " +
                          std::to_string(operators_[i].degree()) + " >= multiplicity " +
                          std::to_string(roots_[i].multiplicity));
      }
    }
  }

  const RootData<F>& rootData() const { return roots_; }
  const std::vector<Poly<F>>& operators() const { return operators_; }
  const Poly<F>& operatorAt(std::size_t i) const { return operators_[i]; }

  /// P_0, or zero when 0 is not a root.
  Poly<F> p0() const {
    auto i = roots_.indexOf(F(0));
    return i ? operators_[*i] : Poly<F>{};
  }

  bool isZero() const {
    for (const auto& p : operators_) {
      if (!p.isZero()) return false;
    }
    return true;
  }

  friend bool operator==(const FunctionalNF&, const FunctionalNF&) = default;

 private:
  RootData<F> roots_;
  std::vector<Poly<F>> operators_;
};

namespace detail {

template <Field F>
F factorial(std::size_t n) {
  F r(1);
  for (std::size_t i = 2; i <= n; ++i) r *= F(static_cast<long>(i));
  return r;
}

template <Field F>
F power(const F& base, std::size_t e) {
  F r(1);
  F b = base;
  while (e != 0) {
    if (e & 1U) r *= b;
    e >>= 1U;
    if (e != 0) b *= b;
  }
  return r;
}

}  // namespace detail

/// L(g) = S_0(P_0(d/dt) g) + sum_lambda S_lambda(P_lambda(D) g).
template <Field F>
F evaluate(const FunctionalNF<F>& L, const Poly<F>& g) {
  F total(0);
  for (std::size_t i = 0; i < L.rootData().size(); ++i) {
    const F& lambda = L.rootData()[i].value;
    const Poly<F>& op = L.operatorAt(i);
    if (op.isZero()) continue;
    if (lambda.isZero()) {
      total += evalAt(applyDerOp(op, g), F(0));
    } else {
      total += evalAt(applyEulerOp(op, g), lambda);
    }
  }
  return total;
}

/// (L(1), L(t), ..., L(t^(count-1))).
template <Field F>
std::vector<F> toMoments(const FunctionalNF<F>& L, std::size_t count) {
  if (count == 0) throw DomainError("toMoments: count must be at least 1");
  std::vector<F> a(count, F(0));
  for (std::size_t i = 0; i < L.rootData().size(); ++i) {
    const F& lambda = L.rootData()[i].value;
    const Poly<F>& op = L.operatorAt(i);
    if (op.isZero()) continue;
    if (lambda.isZero()) {
      // S_0 o d^j (t^n) = j! [n == j]
      for (std::size_t j = 0; j < op.size() && j < count; ++j) a[j] += op.coeff(j) * detail::factorial<F>(j);
    } else {
      F lambdaPow(1);
      for (std::size_t n = 0; n < count; ++n) {
        a[n] += evalAt(op, F(static_cast<long>(n))) * lambdaPow;
        lambdaPow *= lambda;
      }
    }
  }
  return a;
}

/// Initial terms a_0..a_{N-1} of a sequence obeying the recurrence with
/// characteristic polynomial `charPoly` (degree N).
template <Field F>
struct MomentSeq {
  std::vector<F> values;
  Poly<F> charPoly;
};

/// Recovers the unique normal form whose moments extend `m` under the
/// recurrence, by solving the N x N system in the basis
/// {n^i lambda^n} (lambda != 0) and {[n == i]} (lambda = 0).
template <Field F>
FunctionalNF<F> fromMoments(const MomentSeq<F>& m, const RootData<F>& roots) {
  if (m.charPoly.degree() < 1) throw DomainError("fromMoments: characteristic polynomial must have degree >= 1");
  const auto N = static_cast<std::size_t>(m.charPoly.degree());
  if (m.values.size() != N) {
    throw DomainError("fromMoments: expected " + std::to_string(N) + " initial moments, got " +
                      std::to_string(m.values.size()));
  }
  if (roots.modulus() != m.charPoly.monic()) {
    throw DomainError("fromMoments: root data is not a complete splitting of " + m.charPoly.toString());
  }

  // Column layout: root by root, exponent i = 0..m(lambda)-1.
  Matrix<F> system(N, N);
  std::size_t col = 0;
  for (const auto& root : roots) {
    for (std::size_t i = 0; i < root.multiplicity; ++i, ++col) {
      for (std::size_t n = 0; n < N; ++n) {
        if (root.value.isZero()) {
          system(n, col) = F(n == i ? 1 : 0);
        } else {
          system(n, col) = detail::power(F(static_cast<long>(n)), i) * detail::power(root.value, n);
        }
      }
    }
  }
  auto solution = solveUnique(system, m.values);
  if (!solution) throw std::logic_error("fromMoments: singular recurrence basis (internal error)");

  std::vector<Poly<F>> ops;
  col = 0;
  for (const auto& root : roots) {
    std::vector<F> coeffs(root.multiplicity, F(0));
    for (std::size_t i = 0; i < root.multiplicity; ++i, ++col) {
      coeffs[i] = root.value.isZero() ? (*solution)[col] / detail::factorial<F>(i) : (*solution)[col];
    }
    ops.emplace_back(std::move(coeffs));
  }
  return FunctionalNF<F>(roots, std::move(ops));
}

/// e_lambda = 1 + max_i deg P_lambda^(i) (0 when every P_lambda^(i) is zero).
/// The largest ideal inside the common kernel is (prod (t-lambda)^e_lambda).
template <Field F>
std::vector<std::size_t> largestIdealExponents(const std::vector<FunctionalNF<F>>& functionals) {
  if (functionals.empty()) throw DomainError("largestIdealExponents: no functionals given");
  const RootData<F>& roots = functionals.front().rootData();
  std::vector<std::size_t> exps(roots.size(), 0);
  for (const auto& L : functionals) {
    if (!(L.rootData() == roots)) throw DomainError("largestIdealExponents: functionals use different root data");
    for (std::size_t i = 0; i < roots.size(); ++i) {
      long deg = L.operatorAt(i).degree();
      if (deg != kNegInfDegree) exps[i] = std::max(exps[i], static_cast<std::size_t>(deg) + 1);
    }
  }
  return exps;
}

}  // namespace mz
