#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stybe/poly_matrix.hpp"
#include "stybe/rmatrix.hpp"

namespace stybe {

/// A(lambda) = sum_{n <= depth} A^(n) mu^n with mu = 1/lambda. Coefficients
/// act on an auxiliary factor (slot 0) tensored with a quantum space.
///
/// When `exact` is set the operator is a polynomial in mu, so coefficients
/// past the depth really are zero. Otherwise the series is a truncation and
/// only relations that never reach past the depth are checked.
struct SeriesOperator {
  std::vector<PolyMatrix> coeffs;
  bool exact = false;

  int depth() const { return static_cast<int>(coeffs.size()) - 1; }
  const std::vector<int>& slots() const;
  int aux_dim() const { return slots().at(0); }
  /// Product of the quantum factor dimensions.
  int quantum_dim() const;
  /// coeffs[n], or zero past the depth.
  PolyMatrix at(int n) const;

  /// Throws StructuralError when empty, when shapes disagree or when an
  /// entry is not constant.
  void validate() const;
};

/// L(lambda) = r + mu P, padded with zeros up to `depth` (at least 1).
SeriesOperator fundamental_series(const LinearSolution& lin, int depth = 1);

/// Coefficients of a matrix polynomial in mu, exact.
SeriesOperator series_from_mu(const PolyMatrix& a);

struct OrderCheck {
  int n = 0;
  int m = 0;
  bool pass = true;
  std::optional<EntryDiff> witness;
};

struct RttReport {
  std::vector<OrderCheck> matrix;       // relation in matrix form
  std::vector<OrderCheck> component;    // entrywise form, residual vs. matrix residual
  bool component_agrees = true;
  bool fund2b_applicable = false;       // r_check == P
  bool fund2b_agrees = true;

  bool pass() const;
};

/// Checks, for all 0 <= n, m <= max_order,
///   r L1^(n+1) L2^(m) - r L1^(n) L2^(m+1) + L1^(n) L2^(m)
///     = L1^(m) L2^(n+1) r - L1^(m+1) L2^(n) r + L1^(m) L2^(n)
/// on aux (x) aux (x) quantum, with coefficients past the depth taken as
/// zero. The entrywise form is evaluated independently through the set
/// maps and compared with the matrix residual. Throws StructuralError on a
/// dimension mismatch.
RttReport check_rtt_series(const LinearSolution& lin, const SeriesOperator& l,
                           int max_order);

/// T(lambda) = L13(lambda) L12(lambda) on aux (x) quantum (x) quantum.
SeriesOperator coproduct_series(const SeriesOperator& l);

struct DressParams {
  /// Boundary matrix on the auxiliary space, polynomial in lambda.
  PolyMatrix k0;
  /// Inhomogeneity; the symbol theta1 when absent.
  std::optional<Rational> theta;
};

struct Dressed {
  PolyMatrix lambda_form;  // ((l - t) r + P) (K0 (x) I) ((l + t) r21 + P)
  PolyMatrix mu_form;      // lambda_form / lambda^degree, in mu
  int degree = 0;          // degree in lambda
  /// Scalar factors dropped relative to L(l - t) K0 L(-l - t)^-1.
  std::vector<std::string> normalization;

  SeriesOperator series() const { return series_from_mu(mu_form); }
};

/// Sklyanin dressing with the fundamental representation on one quantum
/// site. Throws Refusal for non-involutive sources, StructuralError when k0
/// has the wrong size.
Dressed dress_reflection(const LinearSolution& lin, const DressParams& params);

/// One more dressing site: L02(l - theta2) K01(l) L02hat(l + theta2) on
/// aux (x) quantum (x) V, with theta2 symbolic.
PolyMatrix coproduct_reflection(const LinearSolution& lin, const PolyMatrix& k);

enum class ReMode { automatic, spectral, constant };

struct ReflectionEquationReport {
  bool constant_mode = false;
  bool pass = true;
  std::optional<EntryDiff> witness;
};

/// Braid form
///   R(l1 - l2) K1(l1) R(l1 + l2) K1(l2) = K1(l2) R(l1 + l2) K1(l1) R(l1 - l2)
/// with R(u) = u r_check + I on aux (x) aux and K in lambda acting on
/// aux (x) quantum (the quantum part may be empty). A constant K is checked
/// in constant mode, r K1 r K1 = K1 r K1 r, unless spectral mode is forced.
ReflectionEquationReport check_reflection_equation(const LinearSolution& lin,
                                                   const PolyMatrix& k,
                                                   ReMode mode = ReMode::automatic);

struct ReflectionAlgebraReport {
  std::vector<OrderCheck> basic;  // exchange relation at (n, m)
  std::vector<OrderCheck> rela1;  // [r K0 r, K^(m)] = 0, n unused
  std::vector<OrderCheck> rela2;  // [r K1 r, K^(m)] = K^m K0 r + K^m r K0 - K0 r K^m - r K0 K^m
  bool k0_scalar = false;
  /// K0 is a multiple of the identity and rela2 holds at m = 1.
  bool finite_subalgebra = false;

  bool pass() const;
};

/// Throws Refusal when depth < 2 or the source is not involutive.
ReflectionAlgebraReport check_reflection_algebra(const LinearSolution& lin,
                                                 const SeriesOperator& k);

}  // namespace stybe
