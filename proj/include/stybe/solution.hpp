#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "stybe/algebra.hpp"
#include "stybe/table.hpp"

namespace stybe {

/// A map r(x, y) = (sigma_x(y), tau_y(x)) on X x X, X = 0..N-1.
///
/// sigma(x, y) holds sigma_x(y) and tau(y, x) holds tau_y(x). Nothing beyond
/// well-formed tables is assumed; properties are computed by the checkers.
struct SetSolution {
  Table sigma;
  Table tau;

  /// Throws StructuralError if the tables differ in size.
  SetSolution(Table sigma_table, Table tau_table);

  int size() const noexcept { return sigma.size(); }
  std::pair<int, int> apply(int x, int y) const noexcept {
    return {sigma(x, y), tau(y, x)};
  }

  /// sigma_x(y) = y, tau_y(x) = x.
  static SetSolution flip(int n);

  auto operator<=>(const SetSolution&) const = default;
  bool operator==(const SetSolution&) const = default;
};

enum class SolutionRule { rump, gv, near };

std::string_view to_string(SolutionRule rule);
SolutionRule parse_solution_rule(std::string_view name);

/// Builds the solution attached to a structure:
///   rump: sigma_a(b) = a o b - a
///   gv:   sigma_a(b) = -a + a o b
///   near: sigma_a(b) = a o b - a o 0 + 1
/// and in every case tau_b(a) = sigma_a(b)^-1 o a o b. Throws Refusal naming
/// the first failing axiom when nb does not satisfy the level the rule needs.
SetSolution solution_from_structure(const NearBrace& nb, SolutionRule rule);

using Triple = std::array<int, 3>;

struct ConstraintCheck {
  bool pass = true;
  std::optional<Triple> witness;  // lexicographically first (eta, x, y)
};

struct BraidReport {
  ConstraintCheck direct;
  ConstraintCheck c1, c2, c3;
  /// direct.pass == (c1.pass && c2.pass && c3.pass)
  bool agree = true;

  bool pass() const { return direct.pass && agree; }
};

/// Checks the braid relation over all N^3 triples by composing r x id and
/// id x r, and separately through the three component constraints.
BraidReport verify_braid(const SetSolution& sol);

struct SolutionDiagnostics {
  bool non_degenerate = false;
  bool involutive = false;
  bool invertible = false;
  std::optional<Table> sigma_hat;  // r^-1(x, y) = (sigma_hat_x(y), tau_hat_y(x))
  std::optional<Table> tau_hat;
  bool hat_maps_bijective = false;
  bool ide1_ok = false;
  /// sigma_hat_x(y) == x o (x^-1 + y), with + reconstructed from mul.
  std::optional<bool> mapzz2_form_ok;
};

SolutionDiagnostics diagnostics(const SetSolution& sol,
                                const GroupTable* mul = nullptr);

bool is_involutive(const SetSolution& sol);
bool is_non_degenerate(const SetSolution& sol);

struct AdditionReport {
  Table add_table;  // add_table(y, x) = y + x := x o sigma_{x^-1}(y)
  bool associative = false;
  bool group = false;
  bool abelian = false;
  bool distributivity_ok = false;
  std::vector<int> phi_table;  // -(a o 0); empty unless group
  /// Packaging (+, o) as a near brace and applying the near rule gives sol
  /// back.
  bool round_trip = false;
};

/// Throws StructuralError when mul is on a different set.
AdditionReport reconstruct_addition(const SetSolution& sol,
                                    const GroupTable& mul);

/// Relabels X by pi (old index -> new index).
SetSolution relabel(const SetSolution& sol, std::span<const int> pi);

/// Lexicographically minimal (sigma, tau) over all relabelings of X.
SetSolution canonical_form(const SetSolution& sol);

struct SolutionSearch {
  bool involutive = false;
  bool non_degenerate = true;
  bool canonical = false;
  unsigned jobs = 1;
  /// Largest accepted n; 0 selects the default (4 for non-degenerate
  /// searches, 2 when degenerate maps are admitted).
  int max_size = 0;
};

/// Exhaustive search over sigma tables (outer) and tau tables (inner). The
/// first constraint fixes sigma_{tau_x(eta)} from sigma alone, which yields
/// candidate sets for every tau entry; the remaining constraints are checked
/// as soon as the tau rows they touch are assigned.
void for_each_solution(int n, const SolutionSearch& search,
                       const std::function<void(const SetSolution&)>& sink);

std::vector<SetSolution> enumerate_solutions(int n,
                                             const SolutionSearch& search);

/// Rump solutions of every left brace of size n (brace-generated mode).
std::vector<SetSolution> enumerate_brace_solutions(int n, bool canonical,
                                                   unsigned jobs = 1);

}  // namespace stybe
