#include "stybe/rmatrix.hpp"

#include <array>

#include "stybe/errors.hpp"

namespace stybe {

namespace {

const Poly kLambda = Poly::variable(Var::lambda);

PropertyCheck scalar_check(const PolyMatrix& product, const Poly& expected,
                           bool applicable) {
  PropertyCheck check;
  check.scalar = scalar_match(product);
  if (!applicable) {
    check.status = CheckStatus::not_applicable;
    return check;
  }
  if (check.scalar && *check.scalar == expected) return check;
  check.status = CheckStatus::fail;
  const auto diff =
      first_difference(product, expected * PolyMatrix::identity(product.slots()));
  if (diff) check.witness = *diff;
  return check;
}

// P A P for an operator on [N, N].
PolyMatrix swap_factors(const LinearSolution& lin, const PolyMatrix& a) {
  return lin.perm * a * lin.perm;
}

}  // namespace

LinearSolution linearize(const SetSolution& sol) {
  const int n = sol.size();
  LinearSolution lin{sol, PolyMatrix({n, n}), PolyMatrix({n, n}), permutation_matrix(n), n,
                     is_involutive(sol), is_non_degenerate(sol)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto [s, t] = sol.apply(x, y);
      lin.r_check.add_to(x * n + y, s * n + t, 1);
    }
  lin.r = lin.perm * lin.r_check;
  return lin;
}

PolyMatrix baxterized_check(const LinearSolution& lin, const Poly& arg) {
  return arg * lin.r_check + PolyMatrix::identity({lin.n, lin.n});
}

PolyMatrix baxterized_r(const LinearSolution& lin, const Poly& arg) {
  return arg * lin.r + lin.perm;
}

Baxterization baxterize(const LinearSolution& lin) {
  return {baxterized_check(lin, kLambda), baxterized_r(lin, kLambda)};
}

PolyMatrix reflection_matrix(std::span<const int> k) {
  const int n = static_cast<int>(k.size());
  check_map(k, n);
  PolyMatrix m({n});
  for (int x = 0; x < n; ++x) m.set(x, k[x], 1);
  return m;
}

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "not_applicable";
  }
  return "fail";
}

PropertyCheck compare(const PolyMatrix& a, const PolyMatrix& b) {
  PropertyCheck check;
  if (auto diff = first_difference(a, b)) {
    check.status = CheckStatus::fail;
    check.witness = std::move(*diff);
  }
  return check;
}

bool BasicProperties::pass() const {
  return constant_braid.ok() && ybe.ok() && unitarity.ok() && crossing_unitarity.ok() &&
         transpose_symmetry.ok();
}

BasicProperties check_basic_properties(const LinearSolution& lin) {
  const int n = lin.n;
  const std::vector<int> space{n, n, n};
  constexpr std::array<int, 2> p12{0, 1}, p23{1, 2};
  BasicProperties out;

  const PolyMatrix c12 = embed(lin.r_check, p12, space);
  const PolyMatrix c23 = embed(lin.r_check, p23, space);
  out.constant_braid = compare(c12 * c23 * c12, c23 * c12 * c23);

  const Poly l1 = Poly::variable(Var::lambda1), l2 = Poly::variable(Var::lambda2);
  auto r12 = [&](const Poly& u) { return embed(baxterized_check(lin, u), p12, space); };
  auto r23 = [&](const Poly& u) { return embed(baxterized_check(lin, u), p23, space); };
  out.ybe = compare(r12(l1 - l2) * r23(l1) * r12(l2), r23(l2) * r12(l1) * r23(l1 - l2));

  const PolyMatrix r = baxterized_r(lin, kLambda);
  const PolyMatrix r21_minus = swap_factors(lin, baxterized_r(lin, -kLambda));
  out.unitarity = scalar_check(r * r21_minus, Poly(1) - kLambda * kLambda, lin.involutive);

  const Poly shifted = -kLambda - Poly(n);
  const PolyMatrix crossing =
      partial_transpose(r, 0) * partial_transpose(baxterized_r(lin, shifted), 1);
  out.crossing_unitarity = scalar_check(crossing, kLambda * shifted, lin.involutive);

  out.transpose_symmetry = compare(r.transpose(), swap_factors(lin, r));
  return out;
}

bool TwistReport::pass() const {
  return r_check_conjugate.ok() && r_from_f.ok() && r_from_g.ok() && baxterized.ok();
}

TwistReport build_and_check_twist(const LinearSolution& lin) {
  if (!lin.involutive || !lin.non_degenerate)
    throw Refusal("the twist construction needs an involutive, non-degenerate solution");
  const int n = lin.n;
  const SetSolution& sol = lin.source;
  TwistReport out;
  TwistPair& tw = out.twist;
  tw.f = PolyMatrix({n, n});
  tw.g = PolyMatrix({n, n});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      // e_{x,x} (x) e_{sigma_x(y),y}
      tw.f.set(x * n + sol.sigma(x, y), x * n + y, 1);
      // e_{tau_y(x),x} (x) e_{y,y}
      tw.g.set(sol.tau(y, x) * n + y, x * n + y, 1);
    }
  const auto f_inv = inverse(tw.f);
  const auto g_inv = inverse(tw.g);
  tw.f_invertible = f_inv.has_value();
  tw.g_invertible = g_inv.has_value();

  const PolyMatrix& p = lin.perm;
  const PolyMatrix f21 = p * tw.f * p;
  const PolyMatrix g21 = p * tw.g * p;
  const auto f21_inv = inverse(f21);
  const auto g21_inv = inverse(g21);

  auto missing = [] {
    PropertyCheck c;
    c.status = CheckStatus::fail;
    return c;
  };
  out.r_check_conjugate = f_inv ? compare(lin.r_check, *f_inv * p * tw.f) : missing();
  out.r_from_f = f21_inv ? compare(lin.r, *f21_inv * tw.f) : missing();
  out.r_from_g = g21_inv ? compare(lin.r, *g21_inv * tw.g) : missing();
  out.baxterized =
      f21_inv ? compare(baxterized_r(lin, kLambda),
                        *f21_inv * (kLambda * PolyMatrix::identity({n, n}) + p) * tw.f)
              : missing();
  return out;
}

}  // namespace stybe
