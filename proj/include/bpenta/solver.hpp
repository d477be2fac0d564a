#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "bpenta/dense.hpp"
#include "bpenta/error.hpp"
#include "bpenta/rational_function.hpp"
#include "bpenta/scalar.hpp"
#include "bpenta/system.hpp"

namespace bpenta {

/// A1 = L U with unit lower-triangular L and upper-triangular U.
///
///   beta[k]   = beta_{k+1}   pivots, U(k, k)
///   alpha[k]  = alpha_{k+1}  U(k, k+1)
///   gamma[k]  = gamma_{k+2}  L(k+1, k)
///
/// U(k, k+2) is the system's upper2[k] and L(k+2, k) is lower2[k] / beta[k];
/// neither needs separate storage.
template <ScalarField T>
struct LUFactors {
  std::vector<T> alpha;
  std::vector<T> beta;
  std::vector<T> gamma;
  /// 1-based pivot numbers whose identically zero value was replaced by the
  /// placeholder x. Always empty outside symbolic mode.
  std::vector<std::size_t> replaced;

  std::size_t size() const { return beta.size(); }
};

struct FactorOptions {
  /// Float mode only: a pivot with |beta| < zero_tolerance also counts as
  /// zero. The default 0 keeps the exact beta == 0 test.
  double zero_tolerance = 0.0;
};

namespace detail {

/// The recurrences for alpha, beta and gamma, written once for every scalar
/// kind. `on_pivot(k, beta_k)` runs right after each pivot is formed and
/// either throws or rewrites it.
template <ScalarField T, class OnPivot>
LUFactors<T> factor_with(const PentaSystem<T>& s, OnPivot&& on_pivot) {
  const std::size_t n = s.size();
  LUFactors<T> f;
  f.alpha.reserve(n - 1);
  f.beta.reserve(n);
  f.gamma.reserve(n - 1);

  f.beta.push_back(s.diag[0]);
  on_pivot(0, f.beta[0], f);
  f.alpha.push_back(s.upper1[0]);

  f.gamma.push_back(s.lower1[0] / f.beta[0]);
  f.beta.push_back(s.diag[1] - f.alpha[0] * f.gamma[0]);
  f.alpha.push_back(s.upper1[1] - f.gamma[0] * s.upper2[0]);
  on_pivot(1, f.beta[1], f);

  for (std::size_t k = 2; k < n; ++k) {
    // L(k, k-2), the second subdiagonal multiplier.
    const T m = s.lower2[k - 2] / f.beta[k - 2];
    T g = (s.lower1[k - 1] - m * f.alpha[k - 2]) / f.beta[k - 1];
    if (k + 1 < n) f.alpha.push_back(s.upper1[k] - g * s.upper2[k - 1]);
    f.beta.push_back(s.diag[k] - m * s.upper2[k - 2] - f.alpha[k - 1] * g);
    f.gamma.push_back(std::move(g));
    on_pivot(k, f.beta[k], f);
  }
  return f;
}

inline Error zero_pivot_error(std::size_t k) {
  return Error(ErrorKind::ZeroPivot, "zero pivot beta[" + std::to_string(k + 1) + "]", k + 1);
}

}  // namespace detail

/// Float/exact factorization. Throws ZeroPivot(i) at the first pivot that is
/// zero, including beta_n (which would make the system singular).
template <ScalarField T>
LUFactors<T> factor(const PentaSystem<T>& s, const FactorOptions& options = {}) {
  return detail::factor_with(s, [&](std::size_t k, const T& beta, const LUFactors<T>&) {
    bool zero = ScalarTraits<T>::is_zero(beta);
    if constexpr (std::is_floating_point_v<T>) {
      zero = zero || std::abs(beta) < options.zero_tolerance;
    }
    if (zero) throw detail::zero_pivot_error(k);
  });
}

/// Symbolic factorization: any identically zero pivot becomes the shared
/// placeholder x and the recurrences continue over rational functions.
inline LUFactors<RationalFunction> factor_symbolic(const PentaSystem<RationalFunction>& s) {
  return detail::factor_with(s, [](std::size_t k, RationalFunction& beta, LUFactors<RationalFunction>& f) {
    if (beta.is_zero()) {
      beta = RationalFunction::symbol();
      f.replaced.push_back(k + 1);
    }
  });
}

/// Solves L z = Y1.
template <ScalarField T>
std::vector<T> forward_sweep(const PentaSystem<T>& s, const LUFactors<T>& f) {
  const std::size_t n = s.size();
  std::vector<T> z;
  z.reserve(n);
  z.push_back(s.rhs[0]);
  z.push_back(s.rhs[1] - f.gamma[0] * z[0]);
  for (std::size_t k = 2; k < n; ++k) {
    z.push_back(s.rhs[k] - s.lower2[k - 2] / f.beta[k - 2] * z[k - 2] - f.gamma[k - 1] * z[k - 1]);
  }
  return z;
}

/// Solves U x = z. Rows were reversed but columns were not, so the result is
/// X in its original order.
template <ScalarField T>
std::vector<T> back_substitute(const PentaSystem<T>& s, const LUFactors<T>& f, const std::vector<T>& z) {
  const std::size_t n = s.size();
  std::vector<T> x(n, ScalarTraits<T>::zero());
  x[n - 1] = z[n - 1] / f.beta[n - 1];
  x[n - 2] = (z[n - 2] - f.alpha[n - 2] * x[n - 1]) / f.beta[n - 2];
  for (std::size_t k = n - 2; k-- > 0;) {
    x[k] = (z[k] - f.alpha[k] * x[k + 1] - s.upper2[k] * x[k + 2]) / f.beta[k];
  }
  return x;
}

/// det(A1) as the product of the pivots.
template <ScalarField T>
T determinant(const LUFactors<T>& f) {
  T det = ScalarTraits<T>::one();
  for (const auto& b : f.beta) det = det * b;
  return det;
}

/// Reversing n rows takes floor(n/2) swaps, so det(A) = (-1)^floor(n/2) det(A1).
template <ScalarField T>
T reversal_sign_adjust(const T& det_a1, std::size_t n) {
  return (n / 2) % 2 == 0 ? det_a1 : -det_a1;
}

template <ScalarField T>
T det_original(const LUFactors<T>& f) {
  return reversal_sign_adjust(determinant(f), f.size());
}

/// Symbolic determinant evaluated at x = 0.
inline BigRational determinant_at_zero(const LUFactors<RationalFunction>& f) {
  return determinant(f).eval_at_zero();
}

inline BigRational det_original_at_zero(const LUFactors<RationalFunction>& f) {
  return reversal_sign_adjust(determinant_at_zero(f), f.size());
}

template <ScalarField T>
DenseMatrix<T> lower_factor(const PentaSystem<T>& s, const LUFactors<T>& f) {
  const std::size_t n = s.size();
  DenseMatrix<T> l = DenseMatrix<T>::identity(n);
  for (std::size_t k = 1; k < n; ++k) l(k, k - 1) = f.gamma[k - 1];
  for (std::size_t k = 2; k < n; ++k) l(k, k - 2) = s.lower2[k - 2] / f.beta[k - 2];
  return l;
}

template <ScalarField T>
DenseMatrix<T> upper_factor(const PentaSystem<T>& s, const LUFactors<T>& f) {
  const std::size_t n = s.size();
  DenseMatrix<T> u(n);
  for (std::size_t k = 0; k < n; ++k) u(k, k) = f.beta[k];
  for (std::size_t k = 0; k + 1 < n; ++k) u(k, k + 1) = f.alpha[k];
  for (std::size_t k = 0; k + 2 < n; ++k) u(k, k + 2) = s.upper2[k];
  return u;
}

template <ScalarField T>
struct SolveReport {
  std::vector<T> x;
  T det_a1;
  T det_a;
  SolveMode mode;
  std::vector<std::size_t> pivot_replacements;
};

/// Report plus the intermediate quantities of the float/exact solve.
template <ScalarField T>
struct SolveResult {
  SolveReport<T> report;
  LUFactors<T> factors;
  std::vector<T> z;
};

/// Report (after substituting x = 0) plus the pre-substitution rational
/// functions.
struct SymbolicSolveResult {
  SolveReport<BigRational> report;
  LUFactors<RationalFunction> factors;
  std::vector<RationalFunction> z;
  std::vector<RationalFunction> x;
  RationalFunction det_a1;
};

/// Float or exact solve, selected by the scalar type. Throws ZeroPivot.
template <ScalarField T>
SolveResult<T> solve(const BackwardPentaSystem<T>& system, const FactorOptions& options = {}) {
  const PentaSystem<T> s = reverse_rows(system);
  SolveResult<T> out;
  out.factors = factor(s, options);
  out.z = forward_sweep(s, out.factors);
  const T det = determinant(out.factors);
  out.report = SolveReport<T>{
      .x = back_substitute(s, out.factors, out.z),
      .det_a1 = det,
      .det_a = reversal_sign_adjust(det, s.size()),
      .mode = ScalarTraits<T>::mode,
      .pivot_replacements = {},
  };
  return out;
}

/// Solve over rational functions in x, replacing zero pivots by x and
/// substituting x = 0 at the end. Throws PoleAtZero when a solution
/// component has a pole at 0, and IdenticallySingular when every component
/// is finite but det(A1) evaluates to 0 (the system is singular).
inline SymbolicSolveResult solve_symbolic(const BackwardPentaSystem<BigRational>& system) {
  const PentaSystem<RationalFunction> s = reverse_rows(convert_system<RationalFunction>(system));
  SymbolicSolveResult out;
  out.factors = factor_symbolic(s);
  out.z = forward_sweep(s, out.factors);
  out.x = back_substitute(s, out.factors, out.z);
  out.det_a1 = determinant(out.factors);

  std::vector<BigRational> x;
  x.reserve(out.x.size());
  for (std::size_t k = 0; k < out.x.size(); ++k) {
    try {
      x.push_back(out.x[k].eval_at_zero());
    } catch (const Error&) {
      throw Error(ErrorKind::PoleAtZero, "x[" + std::to_string(k + 1) + "] = " + out.x[k].to_string() +
                                             " has a pole at x = 0; the system is singular or the method does not apply");
    }
  }
  const BigRational det = out.det_a1.eval_at_zero();
  if (det.is_zero()) {
    throw Error(ErrorKind::IdenticallySingular, "det(A1) vanishes at x = 0; the system is singular");
  }
  out.report = SolveReport<BigRational>{
      .x = std::move(x),
      .det_a1 = det,
      .det_a = reversal_sign_adjust(det, s.size()),
      .mode = SolveMode::Symbolic,
      .pivot_replacements = out.factors.replaced,
  };
  return out;
}

}  // namespace bpenta
