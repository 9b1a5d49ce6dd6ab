#pragma once

#include <optional>
#include <string_view>

#include "stybe/poly_matrix.hpp"
#include "stybe/solution.hpp"

namespace stybe {

/// Matrix form of a set-theoretic solution on C^N (x) C^N.
///
/// r_check = sum_{x,y} e_{x,sigma_x(y)} (x) e_{y,tau_y(x)} and r = P r_check.
/// As a linear map r_check sends e_{sigma_x(y)} (x) e_{tau_y(x)} to
/// e_x (x) e_y; for involutive solutions this is the same as sending
/// e_x (x) e_y to e_{sigma_x(y)} (x) e_{tau_y(x)}.
struct LinearSolution {
  SetSolution source;
  PolyMatrix r_check;
  PolyMatrix r;
  PolyMatrix perm;  // P
  int n = 0;
  bool involutive = false;
  bool non_degenerate = false;
};

LinearSolution linearize(const SetSolution& sol);

/// arg * r_check + I, on slots [N, N].
PolyMatrix baxterized_check(const LinearSolution& lin, const Poly& arg);
/// arg * r + P = P (arg * r_check + I).
PolyMatrix baxterized_r(const LinearSolution& lin, const Poly& arg);

struct Baxterization {
  PolyMatrix r_check;  // lambda r_check + I
  PolyMatrix r;        // lambda r + P
};

Baxterization baxterize(const LinearSolution& lin);

/// k = sum_x e_{x,k(x)} on C^N.
PolyMatrix reflection_matrix(std::span<const int> k);

enum class CheckStatus { pass, fail, not_applicable };
std::string_view to_string(CheckStatus s);

struct PropertyCheck {
  CheckStatus status = CheckStatus::pass;
  std::optional<Poly> scalar;      // the c with lhs = c I, when one exists
  std::optional<EntryDiff> witness;

  bool ok() const { return status != CheckStatus::fail; }
};

struct BasicProperties {
  PropertyCheck constant_braid;      // r12 r23 r12 = r23 r12 r23
  PropertyCheck ybe;                 // two-parameter braid form on V^{(x)3}
  PropertyCheck unitarity;           // R12(l) R21(-l) = (1 - l^2) I
  PropertyCheck crossing_unitarity;  // R^{t1}(l) R^{t2}(-l-N) = l(-l-N) I
  PropertyCheck transpose_symmetry;  // R^{t1 t2}(l) = R21(l)

  bool pass() const;
};

/// Unitarity and crossing unitarity are reported not_applicable for
/// non-involutive sources; the scalar actually found is reported either way
/// when the product is a multiple of the identity.
BasicProperties check_basic_properties(const LinearSolution& lin);

struct TwistPair {
  PolyMatrix f;  // sum_x e_{x,x} (x) V_x, V_x = sum_y e_{sigma_x(y),y}
  PolyMatrix g;  // sum_{x,y} e_{tau_y(x),x} (x) e_{y,y}
  bool f_invertible = false;
  bool g_invertible = false;
};

struct TwistReport {
  TwistPair twist;
  PropertyCheck r_check_conjugate;  // r_check = F^-1 P F
  PropertyCheck r_from_f;           // r = F21^-1 F, F21 = P F P
  PropertyCheck r_from_g;           // r = G21^-1 G
  PropertyCheck baxterized;         // R(l) = F21^-1 (l I + P) F

  bool pass() const;
};

/// Throws Refusal unless the source is involutive and non-degenerate.
TwistReport build_and_check_twist(const LinearSolution& lin);

/// Shorthand: pass when a == b, otherwise fail with the first differing
/// entry.
PropertyCheck compare(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace stybe
