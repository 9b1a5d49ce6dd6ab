#include "stybe/solution.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "stybe/errors.hpp"

namespace stybe {

SetSolution::SetSolution(Table sigma_table, Table tau_table)
    : sigma(std::move(sigma_table)), tau(std::move(tau_table)) {
  if (sigma.size() != tau.size())
    throw StructuralError("sigma and tau tables differ in size");
}

SetSolution SetSolution::flip(int n) {
  std::vector<int> cells(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) cells[x * n + y] = y;
  Table id(n, std::move(cells));
  return SetSolution(id, id);
}

std::string_view to_string(SolutionRule rule) {
  switch (rule) {
    case SolutionRule::rump: return "rump";
    case SolutionRule::gv: return "gv";
    case SolutionRule::near: return "near";
  }
  return "near";
}

SolutionRule parse_solution_rule(std::string_view name) {
  for (auto r : {SolutionRule::rump, SolutionRule::gv, SolutionRule::near})
    if (to_string(r) == name) return r;
  throw StructuralError("unknown rule '" + std::string(name) + "'");
}

SetSolution solution_from_structure(const NearBrace& nb, SolutionRule rule) {
  const StructureKind needed = rule == SolutionRule::rump ? StructureKind::left_brace
                               : rule == SolutionRule::gv ? StructureKind::left_skew_brace
                                                          : StructureKind::near_brace;
  const auto report = verify_structure(nb, needed);
  if (!report.valid) {
    const auto& f = report.failures.front();
    std::string witness;
    for (int v : f.witness) witness += (witness.empty() ? "" : ",") + std::to_string(v);
    throw Refusal("rule '" + std::string(to_string(rule)) + "' needs a " +
                  std::string(to_string(needed)) + "; axiom '" + f.axiom +
                  "' fails at (" + witness + ")");
  }
  const GroupTable add = *GroupTable::from_table(nb.add);
  const GroupTable mul = *GroupTable::from_table(nb.mul);
  const int n = nb.size();
  const int zero = add.identity;
  const int one = mul.identity;
  auto neg = [&](int a) { return add.inverse[a]; };

  Table sigma = Table::constant(n, 0);
  Table tau = Table::constant(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = mul(a, b);
      int s = 0;
      switch (rule) {
        case SolutionRule::rump: s = add(ab, neg(a)); break;
        case SolutionRule::gv: s = add(neg(a), ab); break;
        case SolutionRule::near: s = add(add(ab, neg(mul(a, zero))), one); break;
      }
      sigma.set(a, b, s);
      tau.set(b, a, mul(mul.inverse[s], ab));
    }
  return SetSolution(std::move(sigma), std::move(tau));
}

BraidReport verify_braid(const SetSolution& sol) {
  BraidReport report;
  const int n = sol.size();
  const Table& s = sol.sigma;
  const Table& t = sol.tau;
  auto record = [](ConstraintCheck& check, int eta, int x, int y) {
    if (check.pass) {
      check.pass = false;
      check.witness = Triple{eta, x, y};
    }
  };
  for (int eta = 0; eta < n; ++eta)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        // (r x id)(id x r)(r x id), rightmost factor first
        auto [a1, a2] = sol.apply(eta, x);
        auto [b2, b3] = sol.apply(a2, y);
        auto [l1, l2] = sol.apply(a1, b2);
        const int l3 = b3;
        // (id x r)(r x id)(id x r)
        auto [c2, c3] = sol.apply(x, y);
        auto [d1, d2] = sol.apply(eta, c2);
        auto [r2, r3] = sol.apply(d2, c3);
        const int r1 = d1;
        if (l1 != r1 || l2 != r2 || l3 != r3) record(report.direct, eta, x, y);

        if (s(eta, s(x, y)) != s(s(eta, x), s(t(x, eta), y)))
          record(report.c1, eta, x, y);
        if (t(y, t(x, eta)) != t(t(y, x), t(s(x, y), eta)))
          record(report.c2, eta, x, y);
        if (t(s(t(x, eta), y), s(eta, x)) != s(t(s(x, y), eta), t(y, x)))
          record(report.c3, eta, x, y);
      }
  report.agree =
      report.direct.pass == (report.c1.pass && report.c2.pass && report.c3.pass);
  return report;
}

bool is_involutive(const SetSolution& sol) {
  const int n = sol.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [u, v] = sol.apply(x, y);
      if (sol.apply(u, v) != std::pair{x, y}) return false;
    }
  return true;
}

bool is_non_degenerate(const SetSolution& sol) {
  return sol.sigma.rows_are_bijections() && sol.tau.rows_are_bijections();
}

SolutionDiagnostics diagnostics(const SetSolution& sol, const GroupTable* mul) {
  SolutionDiagnostics d;
  const int n = sol.size();
  d.non_degenerate = is_non_degenerate(sol);
  d.involutive = is_involutive(sol);

  Table sigma_hat = Table::constant(n, 0);
  Table tau_hat = Table::constant(n, 0);
  std::vector<char> hit(static_cast<std::size_t>(n) * n, 0);
  d.invertible = true;
  for (int x = 0; x < n && d.invertible; ++x)
    for (int y = 0; y < n; ++y) {
      auto [u, v] = sol.apply(x, y);
      if (hit[u * n + v]) {
        d.invertible = false;
        break;
      }
      hit[u * n + v] = 1;
      sigma_hat.set(u, v, x);
      tau_hat.set(v, u, y);
    }
  if (!d.invertible) return d;

  d.hat_maps_bijective =
      sigma_hat.rows_are_bijections() && tau_hat.rows_are_bijections();
  d.ide1_ok = true;
  for (int x = 0; x < n && d.ide1_ok; ++x)
    for (int y = 0; y < n; ++y) {
      const int sh = sigma_hat(x, y), th = tau_hat(y, x);
      const int s = sol.sigma(x, y), t = sol.tau(y, x);
      if (sol.sigma(sh, th) != x || sigma_hat(s, t) != x ||
          sol.tau(th, sh) != y || tau_hat(t, s) != y) {
        d.ide1_ok = false;
        break;
      }
    }

  if (mul) {
    if (mul->size() != n)
      throw StructuralError("multiplication table is on a different set");
    // y + x := x o sigma_{x^-1}(y)
    auto plus = [&](int y, int x) { return (*mul)(x, sol.sigma(mul->inverse[x], y)); };
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        ok = sigma_hat(x, y) == (*mul)(x, plus(mul->inverse[x], y));
    d.mapzz2_form_ok = ok;
  }
  d.sigma_hat = std::move(sigma_hat);
  d.tau_hat = std::move(tau_hat);
  return d;
}

AdditionReport reconstruct_addition(const SetSolution& sol, const GroupTable& mul) {
  const int n = sol.size();
  if (mul.size() != n)
    throw StructuralError("multiplication table is on a different set");
  AdditionReport report;
  std::vector<int> cells(static_cast<std::size_t>(n) * n);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      cells[y * n + x] = mul(x, sol.sigma(mul.inverse[x], y));
  report.add_table = Table(n, std::move(cells));
  const Table& add = report.add_table;

  report.associative = true;
  for (int a = 0; a < n && report.associative; ++a)
    for (int b = 0; b < n && report.associative; ++b)
      for (int c = 0; c < n; ++c)
        if (add(add(a, b), c) != add(a, add(b, c))) {
          report.associative = false;
          break;
        }
  report.abelian = true;
  for (int a = 0; a < n && report.abelian; ++a)
    for (int b = a + 1; b < n; ++b)
      if (add(a, b) != add(b, a)) {
        report.abelian = false;
        break;
      }

  const auto group = GroupTable::from_table(add);
  report.group = group.has_value();
  if (!report.group) return report;

  const int zero = group->identity;
  report.phi_table.resize(n);
  for (int a = 0; a < n; ++a) report.phi_table[a] = group->inverse[mul(a, zero)];
  report.distributivity_ok = true;
  for (int a = 0; a < n && report.distributivity_ok; ++a)
    for (int b = 0; b < n && report.distributivity_ok; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(a, add(b, c)) !=
            add(add(mul(a, b), report.phi_table[a]), mul(a, c))) {
          report.distributivity_ok = false;
          break;
        }
  if (report.distributivity_ok) {
    NearBrace nb(add, mul.op, StructureKind::near_brace);
    report.round_trip = solution_from_structure(nb, SolutionRule::near) == sol;
  }
  return report;
}

SetSolution relabel(const SetSolution& sol, std::span<const int> pi) {
  return SetSolution(sol.sigma.relabel(pi), sol.tau.relabel(pi));
}

SetSolution canonical_form(const SetSolution& sol) {
  const int n = sol.size();
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  SetSolution best = sol;
  while (std::next_permutation(pi.begin(), pi.end())) {
    SetSolution candidate = relabel(sol, pi);
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

}  // namespace stybe
