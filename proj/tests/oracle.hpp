#pragma once

// Slow, independently written reference implementations used to check the
// library. Nothing here calls the code under test except for converting
// results into library types at the end.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "stybe/solution.hpp"

namespace oracle {

using Grid = std::vector<std::vector<int>>;  // grid[a][b]

struct RawSolution {
  Grid s;  // s[x][y] = sigma_x(y)
  Grid t;  // t[y][x] = tau_y(x)
  bool operator<(const RawSolution& o) const { return std::tie(s, t) < std::tie(o.s, o.t); }
  bool operator==(const RawSolution& o) const { return s == o.s && t == o.t; }
};

inline std::pair<int, int> apply(const RawSolution& r, int x, int y) {
  return {r.s[x][y], r.t[y][x]};
}

// (r x 1)(1 x r)(r x 1) == (1 x r)(r x 1)(1 x r) on every triple, by
// composing maps on triples.
inline bool braid(const RawSolution& r) {
  const int n = static_cast<int>(r.s.size());
  using T = std::array<int, 3>;
  auto r12 = [&](T v) {
    auto [a, b] = apply(r, v[0], v[1]);
    return T{a, b, v[2]};
  };
  auto r23 = [&](T v) {
    auto [a, b] = apply(r, v[1], v[2]);
    return T{v[0], a, b};
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const T v{a, b, c};
        if (r12(r23(r12(v))) != r23(r12(r23(v)))) return false;
      }
  return true;
}

inline bool involutive(const RawSolution& r) {
  const int n = static_cast<int>(r.s.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [u, v] = apply(r, x, y);
      if (apply(r, u, v) != std::pair{x, y}) return false;
    }
  return true;
}

inline RawSolution relabel(const RawSolution& r, const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  RawSolution out{Grid(n, std::vector<int>(n)), Grid(n, std::vector<int>(n))};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      out.s[p[a]][p[b]] = p[r.s[a][b]];
      out.t[p[a]][p[b]] = p[r.t[a][b]];
    }
  return out;
}

inline RawSolution canonical(const RawSolution& r) {
  const int n = static_cast<int>(r.s.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  RawSolution best = r;
  do best = std::min(best, relabel(r, p));
  while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// Every non-degenerate solution on n points: all choices of n permutations
// for sigma and n permutations for tau, filtered by the braid relation.
inline std::vector<RawSolution> all_non_degenerate(int n, bool involutive_only) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t m = perms.size();
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= m;
  auto grid = [&](std::size_t code) {
    Grid g(n);
    for (int i = 0; i < n; ++i) {
      g[i] = perms[code % m];
      code /= m;
    }
    return g;
  };
  std::vector<RawSolution> out;
  for (std::size_t a = 0; a < total; ++a)
    for (std::size_t b = 0; b < total; ++b) {
      RawSolution r{grid(a), grid(b)};
      if (!braid(r)) continue;
      if (involutive_only && !involutive(r)) continue;
      out.push_back(std::move(r));
    }
  return out;
}

inline std::set<RawSolution> classes(const std::vector<RawSolution>& sols) {
  std::set<RawSolution> out;
  for (const auto& r : sols) out.insert(canonical(r));
  return out;
}

inline RawSolution from_library(const stybe::SetSolution& sol) {
  return {sol.sigma.rows(), sol.tau.rows()};
}

inline stybe::SetSolution to_library(const RawSolution& r) {
  return stybe::SetSolution(stybe::Table::from_rows(r.s), stybe::Table::from_rows(r.t));
}

// Labeled group structures on n points by exhaustion over all tables.
inline int count_group_tables(int n) {
  const int cells = n * n;
  std::vector<int> t(cells, 0);
  int count = 0;
  while (true) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        for (int c = 0; c < n && ok; ++c)
          ok = t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]];
    int e = -1;
    for (int c = 0; c < n && ok && e < 0; ++c) {
      bool id = true;
      for (int a = 0; a < n; ++a) id = id && t[c * n + a] == a && t[a * n + c] == a;
      if (id) e = c;
    }
    if (ok && e >= 0) {
      for (int a = 0; a < n && ok; ++a) {
        bool inv = false;
        for (int b = 0; b < n; ++b) inv = inv || t[a * n + b] == e;
        ok = inv;
      }
      if (ok) ++count;
    }
    int i = cells - 1;
    while (i >= 0 && t[i] == n - 1) t[i--] = 0;
    if (i < 0) break;
    ++t[i];
  }
  return count;
}

// Dense rational matrices, indexed directly from the set maps.
using Q = mpq_class;
using Dense = std::vector<std::vector<Q>>;

inline Dense zeros(int d) { return Dense(d, std::vector<Q>(d, 0)); }
inline Dense eye(int d) {
  Dense m = zeros(d);
  for (int i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}
inline Dense mul(const Dense& a, const Dense& b) {
  const int d = static_cast<int>(a.size());
  Dense c = zeros(d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      if (a[i][k] != 0)
        for (int j = 0; j < d; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}
inline Dense add(const Dense& a, const Dense& b, const Q& sb = 1) {
  Dense c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c[i][j] += sb * b[i][j];
  return c;
}
inline Dense scale(const Q& s, const Dense& a) {
  Dense c = a;
  for (auto& row : c)
    for (auto& v : row) v *= s;
  return c;
}
inline Dense kron(const Dense& a, const Dense& b) {
  const int da = static_cast<int>(a.size()), db = static_cast<int>(b.size());
  Dense c = zeros(da * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      for (int k = 0; k < db; ++k)
        for (int l = 0; l < db; ++l) c[i * db + k][j * db + l] = a[i][j] * b[k][l];
  return c;
}

// The linear map e_x (x) e_y -> e_sigma (x) e_tau is the transpose of
// sum e_{x,sigma} (x) e_{y,tau}; this returns the latter.
inline Dense r_check(const RawSolution& r) {
  const int n = static_cast<int>(r.s.size());
  Dense m = zeros(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) m[x * n + y][r.s[x][y] * n + r.t[y][x]] += 1;
  return m;
}
inline Dense flip(int n) {
  Dense m = zeros(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) m[x * n + y][y * n + x] = 1;
  return m;
}

// Operator on factors i < j of a three-fold space of dimension n each,
// assembled by index arithmetic.
inline Dense on_pair(const Dense& op, int n, int i, int j) {
  Dense m = zeros(n * n * n);
  for (int a = 0; a < n * n * n; ++a)
    for (int b = 0; b < n * n * n; ++b) {
      const int ad[3] = {a / (n * n), (a / n) % n, a % n};
      const int bd[3] = {b / (n * n), (b / n) % n, b % n};
      const int k = 3 - i - j;
      if (ad[k] != bd[k]) continue;
      m[a][b] = op[ad[i] * n + ad[j]][bd[i] * n + bd[j]];
    }
  return m;
}

// A few rational sample points for identities in one or two variables.
inline std::vector<Q> sample_points() {
  return {Q(2), Q(-3), Q(1, 2), Q(5, 3), Q(-7, 4)};
}

}  // namespace oracle
