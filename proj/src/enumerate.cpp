#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "stybe/algebra.hpp"
#include "stybe/errors.hpp"
#include "stybe/parallel.hpp"

namespace stybe {

namespace {

// Backtracking over Latin squares with a fixed identity element. Cells are
// filled row-major; after every assignment each fully determined triple is
// checked for associativity.
class GroupSearch {
 public:
  GroupSearch(int n, int identity)
      : n_(n), e_(identity), cells_(n * n, -1), row_used_(n, 0), col_used_(n, 0) {
    for (int x = 0; x < n; ++x) {
      assign(e_, x, x);
      if (x != e_) assign(x, e_, x);
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != e_ && b != e_) free_.push_back(a * n + b);
  }

  void run(std::vector<GroupTable>& out) { search(0, out); }

 private:
  int at(int a, int b) const { return cells_[a * n_ + b]; }

  void assign(int a, int b, int v) {
    cells_[a * n_ + b] = v;
    row_used_[a] |= 1u << v;
    col_used_[b] |= 1u << v;
  }
  void unassign(int a, int b, int v) {
    cells_[a * n_ + b] = -1;
    row_used_[a] &= ~(1u << v);
    col_used_[b] &= ~(1u << v);
  }

  // Checks every triple in which the newly set cell (a, b) takes part.
  bool consistent(int a, int b) const {
    const int ab = at(a, b);
    for (int x = 0; x < n_; ++x) {
      // (x a) b vs x (a b)
      const int xa = at(x, a);
      if (xa >= 0) {
        const int l = at(xa, b), r = at(x, ab);
        if (l >= 0 && r >= 0 && l != r) return false;
      }
      // (a b) x vs a (b x)
      const int bx = at(b, x);
      if (bx >= 0) {
        const int l = at(ab, x), r = at(a, bx);
        if (l >= 0 && r >= 0 && l != r) return false;
      }
    }
    // Cell (a, b) used as an outer product: (x y) b with x y = a, and
    // a (y z) with y z = b.
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        if (at(x, y) == a) {
          const int yb = at(y, b);
          if (yb >= 0) {
            const int r = at(x, yb);
            if (r >= 0 && r != ab) return false;
          }
        }
        if (at(x, y) == b) {
          const int ax = at(a, x);
          if (ax >= 0) {
            const int l = at(ax, y);
            if (l >= 0 && l != ab) return false;
          }
        }
      }
    return true;
  }

  void search(std::size_t k, std::vector<GroupTable>& out) {
    if (k == free_.size()) {
      auto g = GroupTable::from_table(Table(n_, cells_));
      if (g) out.push_back(std::move(*g));
      return;
    }
    const int a = free_[k] / n_, b = free_[k] % n_;
    const unsigned used = row_used_[a] | col_used_[b];
    for (int v = 0; v < n_; ++v) {
      if (used & (1u << v)) continue;
      assign(a, b, v);
      if (consistent(a, b)) search(k + 1, out);
      unassign(a, b, v);
    }
  }

  int n_, e_;
  std::vector<int> cells_;
  std::vector<unsigned> row_used_, col_used_;
  std::vector<int> free_;
};

bool is_brace_level(StructureKind level) {
  return level == StructureKind::left_brace ||
         level == StructureKind::left_skew_brace ||
         level == StructureKind::skew_brace;
}

std::vector<std::size_t> visiting_order(std::size_t count,
                                        std::optional<std::uint64_t> seed,
                                        std::uint64_t salt) {
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (seed) {
    std::mt19937_64 rng(*seed ^ salt);
    std::shuffle(order.begin(), order.end(), rng);
  }
  return order;
}

}  // namespace

int default_size_bound(StructureKind level) {
  return is_brace_level(level) ? 6 : 4;
}

const std::vector<GroupTable>& enumerate_group_tables(int n) {
  if (n < 1 || n > 8) throw Refusal("group tables are enumerated for 1 <= n <= 8");
  static std::mutex mutex;
  static std::map<int, std::vector<GroupTable>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<GroupTable> groups;
  for (int e = 0; e < n; ++e) GroupSearch(n, e).run(groups);
  return cache.emplace(n, std::move(groups)).first->second;
}

void for_each_near_brace(int n, StructureKind level,
                         const EnumerationOptions& options,
                         const std::function<void(const NearBrace&)>& sink) {
  const int bound =
      options.max_size > 0 ? options.max_size : default_size_bound(level);
  if (n < 1) throw Refusal("size must be positive");
  if (n > bound)
    throw Refusal("size " + std::to_string(n) + " exceeds the bound " +
                  std::to_string(bound) + " for level " +
                  std::string(to_string(level)));

  const auto& groups = enumerate_group_tables(n);
  const auto add_order = visiting_order(groups.size(), options.shuffle_seed, 1);
  const auto mul_order = visiting_order(groups.size(), options.shuffle_seed, 2);

  // One partition per additive group; merged in partition order.
  std::vector<std::vector<NearBrace>> found(groups.size());
  parallel_for(groups.size(), options.jobs, [&](std::size_t p) {
    const GroupTable& add = groups[add_order[p]];
    if (level == StructureKind::left_brace && !add.abelian()) return;
    for (std::size_t j : mul_order) {
      const GroupTable& mul = groups[j];
      if (is_brace_level(level) && add.identity != mul.identity) continue;
      if (satisfies(add, mul, level))
        found[p].emplace_back(add.op, mul.op, level);
    }
  });

  if (!options.canonical) {
    for (const auto& part : found)
      for (const auto& nb : part) sink(nb);
    return;
  }
  std::set<std::pair<Table, Table>> classes;
  for (const auto& part : found)
    for (const auto& nb : part) {
      NearBrace c = canonical_form(nb);
      classes.emplace(std::move(c.add), std::move(c.mul));
    }
  for (const auto& [add, mul] : classes) sink(NearBrace(add, mul, level));
}

std::vector<NearBrace> enumerate_near_braces(int n, StructureKind level,
                                             const EnumerationOptions& options) {
  std::vector<NearBrace> out;
  for_each_near_brace(n, level, options,
                      [&](const NearBrace& nb) { out.push_back(nb); });
  return out;
}

}  // namespace stybe
