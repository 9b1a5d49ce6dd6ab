#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "stybe/errors.hpp"
#include "stybe/parallel.hpp"
#include "stybe/solution.hpp"

namespace stybe {

namespace {

struct PermutationGroup {
  int n = 0;
  std::vector<std::vector<int>> perms;  // lexicographic order
  std::vector<int> compose;             // compose[i*m+j] = perms[i] o perms[j]
  std::vector<int> inverse;

  explicit PermutationGroup(int size) : n(size) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    const int m = static_cast<int>(perms.size());
    compose.resize(static_cast<std::size_t>(m) * m);
    inverse.resize(m);
    std::vector<int> c(n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        for (int k = 0; k < n; ++k) c[k] = perms[i][perms[j][k]];
        compose[i * m + j] = index_of(c);
        if (std::all_of(c.begin(), c.end(), [k = 0](int v) mutable { return v == k++; }))
          inverse[i] = j;
      }
  }

  int size() const { return static_cast<int>(perms.size()); }
  int index_of(const std::vector<int>& p) const {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
  }
};

// Search over tau rows for a fixed sigma.
class TauSearch {
 public:
  TauSearch(const PermutationGroup& group, const std::vector<int>& sigma_rows,
            bool involutive, std::vector<SetSolution>& out)
      : g_(group), n_(group.n), sigma_rows_(sigma_rows), involutive_(involutive),
        tau_(n_ * n_, -1), out_(out) {}

  void run() {
    if (!build_candidates()) return;
    search(0);
  }

 private:
  int s(int x, int y) const { return g_.perms[sigma_rows_[x]][y]; }
  int t(int x, int y) const { return tau_[x * n_ + y]; }

  // For each (x, eta) the admissible values of tau_x(eta): those a with
  // sigma_a = sigma_{sigma_eta(x)}^-1 o sigma_eta o sigma_x.
  bool build_candidates() {
    const int m = g_.size();
    allowed_.assign(n_ * n_, 0u);
    for (int x = 0; x < n_; ++x)
      for (int eta = 0; eta < n_; ++eta) {
        const int target =
            g_.compose[g_.inverse[sigma_rows_[s(eta, x)]] * m +
                       g_.compose[sigma_rows_[eta] * m + sigma_rows_[x]]];
        unsigned mask = 0;
        for (int a = 0; a < n_; ++a)
          if (sigma_rows_[a] == target) mask |= 1u << a;
        if (involutive_) {
          // r(sigma_eta(x), tau_x(eta)) = (eta, x) forces tau_x(eta).
          const auto& row = g_.perms[sigma_rows_[s(eta, x)]];
          const int forced = static_cast<int>(std::find(row.begin(), row.end(), eta) - row.begin());
          mask &= 1u << forced;
        }
        if (!mask) return false;
        allowed_[x * n_ + eta] = mask;
      }
    return true;
  }

  // Every triple whose terms are all determined must satisfy the second and
  // third constraints.
  bool consistent() const {
    for (int eta = 0; eta < n_; ++eta)
      for (int x = 0; x < n_; ++x) {
        const int tx = t(x, eta);
        for (int y = 0; y < n_; ++y) {
          const int ty = t(y, x);
          if (tx >= 0 && ty >= 0) {
            const int lhs = t(y, tx);
            const int inner = t(s(x, y), eta);
            if (lhs >= 0 && inner >= 0) {
              const int rhs = t(ty, inner);
              if (rhs >= 0 && lhs != rhs) return false;
            }
          }
          if (tx >= 0) {
            const int lhs = t(s(tx, y), s(eta, x));
            const int inner = t(s(x, y), eta);
            if (lhs >= 0 && inner >= 0 && ty >= 0 && lhs != s(inner, ty))
              return false;
          }
        }
      }
    return true;
  }

  void search(int x) {
    if (x == n_) {
      Table sigma = Table::constant(n_, 0), tau = Table::constant(n_, 0);
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
          sigma.set(a, b, s(a, b));
          tau.set(a, b, t(a, b));
        }
      SetSolution sol(std::move(sigma), std::move(tau));
      if (verify_braid(sol).pass() && (!involutive_ || is_involutive(sol)))
        out_.push_back(std::move(sol));
      return;
    }
    for (const auto& row : g_.perms) {
      bool fits = true;
      for (int eta = 0; eta < n_ && fits; ++eta)
        fits = allowed_[x * n_ + eta] & (1u << row[eta]);
      if (!fits) continue;
      std::copy(row.begin(), row.end(), tau_.begin() + x * n_);
      if (consistent()) search(x + 1);
      std::fill(tau_.begin() + x * n_, tau_.begin() + (x + 1) * n_, -1);
    }
  }

  const PermutationGroup& g_;
  int n_;
  const std::vector<int>& sigma_rows_;
  bool involutive_;
  std::vector<int> tau_;
  std::vector<unsigned> allowed_;
  std::vector<SetSolution>& out_;
};

void enumerate_non_degenerate(int n, const SolutionSearch& search,
                              std::vector<std::vector<SetSolution>>& parts) {
  const PermutationGroup group(n);
  const int m = group.size();
  parts.assign(m, {});
  // Partition on the permutation chosen for sigma_0.
  parallel_for(static_cast<std::size_t>(m), search.jobs, [&](std::size_t first) {
    std::vector<int> rows(n, 0);
    rows[0] = static_cast<int>(first);
    while (true) {
      TauSearch(group, rows, search.involutive, parts[first]).run();
      int k = n - 1;
      while (k >= 1 && rows[k] == m - 1) rows[k--] = 0;
      if (k < 1) break;
      ++rows[k];
    }
  });
}

// Degenerate maps admitted: plain exhaustion over all sigma and tau tables.
void enumerate_all_maps(int n, const SolutionSearch& search,
                        std::vector<std::vector<SetSolution>>& parts) {
  const int cells = n * n;
  std::size_t tables = 1;
  for (int i = 0; i < cells; ++i) tables *= n;
  auto decode = [&](std::size_t code) {
    std::vector<int> c(cells);
    for (int i = cells - 1; i >= 0; --i) {
      c[i] = static_cast<int>(code % n);
      code /= n;
    }
    return Table(n, std::move(c));
  };
  parts.assign(tables, {});
  parallel_for(tables, search.jobs, [&](std::size_t si) {
    const Table sigma = decode(si);
    for (std::size_t ti = 0; ti < tables; ++ti) {
      SetSolution sol(sigma, decode(ti));
      if (!verify_braid(sol).pass()) continue;
      if (search.involutive && !is_involutive(sol)) continue;
      parts[si].push_back(std::move(sol));
    }
  });
}

}  // namespace

void for_each_solution(int n, const SolutionSearch& search,
                       const std::function<void(const SetSolution&)>& sink) {
  const int bound =
      search.max_size > 0 ? search.max_size : (search.non_degenerate ? 4 : 2);
  if (n < 1) throw Refusal("size must be positive");
  if (n > bound)
    throw Refusal("exhaustive solution search is bounded by n <= " +
                  std::to_string(bound) + "; use brace-generated mode beyond");
  if (n > 6) throw Refusal("exhaustive solution search supports n <= 6");

  std::vector<std::vector<SetSolution>> parts;
  if (search.non_degenerate)
    enumerate_non_degenerate(n, search, parts);
  else
    enumerate_all_maps(n, search, parts);

  if (!search.canonical) {
    for (const auto& part : parts)
      for (const auto& sol : part) sink(sol);
    return;
  }
  std::set<SetSolution> classes;
  for (const auto& part : parts)
    for (const auto& sol : part) classes.insert(canonical_form(sol));
  for (const auto& sol : classes) sink(sol);
}

std::vector<SetSolution> enumerate_solutions(int n, const SolutionSearch& search) {
  std::vector<SetSolution> out;
  for_each_solution(n, search, [&](const SetSolution& s) { out.push_back(s); });
  return out;
}

std::vector<SetSolution> enumerate_brace_solutions(int n, bool canonical,
                                                   unsigned jobs) {
  EnumerationOptions options;
  options.jobs = jobs;
  std::set<SetSolution> found;
  for_each_near_brace(n, StructureKind::left_brace, options, [&](const NearBrace& nb) {
    auto sol = solution_from_structure(nb, SolutionRule::rump);
    found.insert(canonical ? canonical_form(sol) : std::move(sol));
  });
  return {found.begin(), found.end()};
}

}  // namespace stybe
