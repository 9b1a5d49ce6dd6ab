#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "stybe/algebra.hpp"
#include "stybe/solution.hpp"

namespace stybe {

/// A map k: X -> X. The flags are always recomputed from the table.
struct ReflectionMap {
  std::vector<int> table;
  bool bijective = false;
  bool involutive = false;

  /// Throws StructuralError on entries out of range.
  static ReflectionMap from_table(std::vector<int> table);
  static ReflectionMap identity(int n);

  int size() const noexcept { return static_cast<int>(table.size()); }
  int operator()(int x) const noexcept { return table[x]; }
};

enum class ReflectionMode { direct, cc1, dual };
enum class ReflectionFilter { all, tau_equivariant, central };

std::string_view to_string(ReflectionMode mode);
ReflectionMode parse_reflection_mode(std::string_view name);
std::string_view to_string(ReflectionFilter filter);
ReflectionFilter parse_reflection_filter(std::string_view name);

struct ReflectionReport {
  ReflectionMode mode = ReflectionMode::direct;
  bool pass = true;
  std::optional<std::array<int, 2>> witness;  // first failing (x, y)
};

/// direct: r(k x id) r(k x id) = (k x id) r(k x id) r on every pair.
/// dual:   the same with id x k.
/// cc1:    tau_{tau_y(x)}(k(sigma_x(y))) = tau_{tau_y(k x)}(k(sigma_{k x}(y))),
///         only for involutive non-degenerate solutions (Refusal otherwise).
ReflectionReport verify_reflection(const SetSolution& sol, const ReflectionMap& k,
                                   ReflectionMode mode);

/// True when k(tau_y(x)) = tau_y(k(x)) for all x, y.
bool is_tau_equivariant(const SetSolution& sol, const ReflectionMap& k);

/// Every map commuting with all tau_y, found by backtracking. Unverified.
std::vector<ReflectionMap> tau_equivariant_maps(const SetSolution& sol);

/// k = tau_c for each c central in (B, o). Unverified. Throws
/// StructuralError when nb is on a different set or o is not a group.
std::vector<ReflectionMap> central_element_maps(const SetSolution& sol,
                                                const NearBrace& nb);

struct ReflectionSearch {
  ReflectionFilter filter = ReflectionFilter::all;
  /// Largest N for the exhaustive filters; 0 selects the default of 6.
  int max_size = 0;
};

/// Reflections of sol.
///   all:             every k passing the direct check, in increasing table order
///   tau_equivariant: every k commuting with all tau_y, in increasing table order
///   central:         k = tau_c for each c central in (B, o), by increasing c; needs nb
/// Every emitted map is re-verified in direct mode. Throws StructuralError
/// when nb is missing or on a different set, Refusal when the bound is
/// exceeded.
std::vector<ReflectionMap> enumerate_reflections(const SetSolution& sol,
                                                 const ReflectionSearch& search,
                                                 const NearBrace* nb = nullptr);

}  // namespace stybe
