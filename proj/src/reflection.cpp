#include "stybe/reflection.hpp"

#include <string>

#include "stybe/errors.hpp"

namespace stybe {

ReflectionMap ReflectionMap::from_table(std::vector<int> table) {
  check_map(table, static_cast<int>(table.size()));
  ReflectionMap k;
  k.table = std::move(table);
  k.bijective = is_permutation(k.table);
  k.involutive = true;
  for (int x = 0; x < k.size() && k.involutive; ++x)
    k.involutive = k.table[k.table[x]] == x;
  return k;
}

ReflectionMap ReflectionMap::identity(int n) {
  std::vector<int> t(n);
  for (int x = 0; x < n; ++x) t[x] = x;
  return from_table(std::move(t));
}

std::string_view to_string(ReflectionMode mode) {
  switch (mode) {
    case ReflectionMode::direct: return "direct";
    case ReflectionMode::cc1: return "cc1";
    case ReflectionMode::dual: return "dual";
  }
  return "direct";
}

ReflectionMode parse_reflection_mode(std::string_view name) {
  for (auto m : {ReflectionMode::direct, ReflectionMode::cc1, ReflectionMode::dual})
    if (to_string(m) == name) return m;
  throw StructuralError("unknown reflection mode '" + std::string(name) + "'");
}

std::string_view to_string(ReflectionFilter filter) {
  switch (filter) {
    case ReflectionFilter::all: return "all";
    case ReflectionFilter::tau_equivariant: return "tau_equivariant";
    case ReflectionFilter::central: return "central";
  }
  return "all";
}

ReflectionFilter parse_reflection_filter(std::string_view name) {
  for (auto f : {ReflectionFilter::all, ReflectionFilter::tau_equivariant,
                 ReflectionFilter::central})
    if (to_string(f) == name) return f;
  throw StructuralError("unknown reflection filter '" + std::string(name) + "'");
}

ReflectionReport verify_reflection(const SetSolution& sol, const ReflectionMap& k,
                                   ReflectionMode mode) {
  const int n = sol.size();
  if (k.size() != n)
    throw StructuralError("reflection map has length " + std::to_string(k.size()) +
                          ", solution has size " + std::to_string(n));
  if (mode == ReflectionMode::cc1 && !(is_involutive(sol) && is_non_degenerate(sol)))
    throw Refusal(
        "the cc1 criterion characterizes reflections only for involutive, "
        "non-degenerate solutions");

  ReflectionReport report;
  report.mode = mode;
  using Pair = std::pair<int, int>;
  auto r = [&](Pair p) { return sol.apply(p.first, p.second); };
  auto k1 = [&](Pair p) { return Pair{k(p.first), p.second}; };
  auto k2 = [&](Pair p) { return Pair{p.first, k(p.second)}; };
  const Table& s = sol.sigma;
  const Table& t = sol.tau;

  for (int x = 0; x < n && report.pass; ++x)
    for (int y = 0; y < n; ++y) {
      bool ok = true;
      switch (mode) {
        case ReflectionMode::direct:
          ok = r(k1(r(k1({x, y})))) == k1(r(k1(r({x, y}))));
          break;
        case ReflectionMode::dual:
          ok = r(k2(r(k2({x, y})))) == k2(r(k2(r({x, y}))));
          break;
        case ReflectionMode::cc1: {
          const int kx = k(x);
          ok = t(t(y, x), k(s(x, y))) == t(t(y, kx), k(s(kx, y)));
          break;
        }
      }
      if (!ok) {
        report.pass = false;
        report.witness = std::array<int, 2>{x, y};
        break;
      }
    }
  return report;
}

bool is_tau_equivariant(const SetSolution& sol, const ReflectionMap& k) {
  const int n = sol.size();
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      if (k(sol.tau(y, x)) != sol.tau(y, k(x))) return false;
  return true;
}

namespace {

// Backtracking over k(0), k(1), ...; a partial assignment is rejected as
// soon as some k(tau_y(x)) = tau_y(k(x)) with both sides known fails.
void equivariant_search(const SetSolution& sol, std::vector<int>& k, int x,
                        std::vector<ReflectionMap>& out) {
  const int n = sol.size();
  if (x == n) {
    out.push_back(ReflectionMap::from_table(k));
    return;
  }
  for (int v = 0; v < n; ++v) {
    k[x] = v;
    bool ok = true;
    for (int y = 0; y < n && ok; ++y)
      for (int a = 0; a <= x && ok; ++a) {
        const int image = sol.tau(y, a);
        if (image <= x) ok = k[image] == sol.tau(y, k[a]);
      }
    if (ok) equivariant_search(sol, k, x + 1, out);
  }
  k[x] = -1;
}

}  // namespace

std::vector<ReflectionMap> tau_equivariant_maps(const SetSolution& sol) {
  std::vector<ReflectionMap> out;
  std::vector<int> k(sol.size(), -1);
  equivariant_search(sol, k, 0, out);
  return out;
}

std::vector<ReflectionMap> central_element_maps(const SetSolution& sol,
                                                const NearBrace& nb) {
  const int n = sol.size();
  if (nb.size() != n)
    throw StructuralError("structure and solution are on different sets");
  const auto mul = GroupTable::from_table(nb.mul);
  if (!mul) throw StructuralError("structure multiplication is not a group");
  std::vector<ReflectionMap> out;
  for (int c : mul->center()) {
    std::vector<int> t(n);
    for (int x = 0; x < n; ++x) t[x] = sol.tau(c, x);
    out.push_back(ReflectionMap::from_table(std::move(t)));
  }
  return out;
}

std::vector<ReflectionMap> enumerate_reflections(const SetSolution& sol,
                                                 const ReflectionSearch& search,
                                                 const NearBrace* nb) {
  const int n = sol.size();
  std::vector<ReflectionMap> out;
  if (search.filter == ReflectionFilter::central) {
    if (!nb) throw StructuralError("central filter needs the underlying structure");
    out = central_element_maps(sol, *nb);
  } else {
    const int bound = search.max_size > 0 ? search.max_size : 6;
    if (n > bound)
      throw Refusal("exhaustive reflection search is bounded by N <= " +
                    std::to_string(bound));
    if (search.filter == ReflectionFilter::tau_equivariant) {
      out = tau_equivariant_maps(sol);
    } else {
      std::vector<int> k(n, 0);
      while (true) {
        auto map = ReflectionMap::from_table(k);
        if (verify_reflection(sol, map, ReflectionMode::direct).pass)
          out.push_back(std::move(map));
        int i = n - 1;
        while (i >= 0 && k[i] == n - 1) k[i--] = 0;
        if (i < 0) break;
        ++k[i];
      }
      return out;
    }
  }
  std::erase_if(out, [&](const ReflectionMap& k) {
    return !verify_reflection(sol, k, ReflectionMode::direct).pass;
  });
  return out;
}

}  // namespace stybe
