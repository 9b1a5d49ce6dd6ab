#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace stybe {

using Rational = mpq_class;

/// Spectral parameters lambda, lambda_1, lambda_2, inhomogeneities theta,
/// theta_1, theta_2, and the series variable mu = 1/lambda.
enum class Var : std::uint8_t { lambda, lambda1, lambda2, theta, theta1, theta2, mu };

inline constexpr int kNumVars = 7;

/// Short names used in monomial keys: l, l1, l2, t, t1, t2, m.
std::string_view var_name(Var v);
Var parse_var(std::string_view name);

using Exponents = std::array<std::uint8_t, kNumVars>;

/// "1" for the empty monomial, otherwise factors like "l1^2*t^1" in variable
/// order.
std::string monomial_key(const Exponents& e);
Exponents parse_monomial_key(std::string_view key);

/// Parses "p", "-p" or "p/q" exactly.
Rational parse_rational(std::string_view text);
std::string rational_string(const Rational& q);

/// Multivariate polynomial with exact rational coefficients. Zero
/// coefficients are never stored; terms are ordered by exponent vector.
class Poly {
 public:
  using Terms = std::map<Exponents, Rational>;

  Poly() = default;
  Poly(long value);  // NOLINT: implicit constants read naturally in formulas
  Poly(const Rational& value);  // NOLINT

  static Poly variable(Var v, int power = 1);
  static Poly monomial(const Exponents& e, const Rational& coeff);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant term (zero when absent).
  Rational constant_term() const;
  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  int degree(Var v) const;
  bool depends_on(Var v) const { return degree(v) > 0; }

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  /// Adds c * m for a monomial m, keeping the no-zero invariant.
  void add_term(const Exponents& e, const Rational& c);

  /// Replaces every occurrence of v by value.
  Poly substitute(Var v, const Poly& value) const;
  /// Coefficient of v^k, as a polynomial in the other variables.
  Poly coefficient(Var v, int k) const;

  bool operator==(const Poly& other) const { return terms_ == other.terms_; }
  bool operator!=(const Poly& other) const { return !(*this == other); }

  /// Human-readable form, highest total degree first: "-l^2+1",
  /// "-l^2-2*l", "3/2*l1*t".
  std::string to_string() const;

 private:
  Terms terms_;
};

Poly pow(const Poly& p, int k);

}  // namespace stybe
