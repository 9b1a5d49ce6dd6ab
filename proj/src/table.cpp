#include "stybe/table.hpp"

#include <string>

#include "stybe/errors.hpp"

namespace stybe {

Table::Table(int n, std::vector<int> cells) : n_(n), cells_(std::move(cells)) {
  if (n < 1) throw StructuralError("table size must be positive");
  if (cells_.size() != static_cast<std::size_t>(n) * n)
    throw StructuralError("table of size " + std::to_string(n) + " needs " +
                          std::to_string(n * n) + " cells, got " +
                          std::to_string(cells_.size()));
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i] < 0 || cells_[i] >= n)
      throw StructuralError("table entry (" + std::to_string(i / n) + ", " +
                            std::to_string(i % n) + ") = " +
                            std::to_string(cells_[i]) + " out of range");
  }
}

Table Table::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> cells;
  cells.reserve(rows.size() * rows.size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n)
      throw StructuralError("table is not square");
    cells.insert(cells.end(), r.begin(), r.end());
  }
  return Table(n, std::move(cells));
}

Table Table::constant(int n, int value) {
  return Table(n, std::vector<int>(static_cast<std::size_t>(n) * n, value));
}

std::vector<std::vector<int>> Table::rows() const {
  std::vector<std::vector<int>> out(n_);
  for (int a = 0; a < n_; ++a) out[a].assign(row(a).begin(), row(a).end());
  return out;
}

bool Table::rows_are_bijections() const {
  for (int a = 0; a < n_; ++a)
    if (!is_permutation(row(a))) return false;
  return true;
}

bool Table::columns_are_bijections() const {
  std::vector<char> seen(n_);
  for (int b = 0; b < n_; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int a = 0; a < n_; ++a) {
      if (seen[(*this)(a, b)]) return false;
      seen[(*this)(a, b)] = 1;
    }
  }
  return true;
}

Table Table::relabel(std::span<const int> pi) const {
  Table out = *this;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) out.set(pi[a], pi[b], pi[(*this)(a, b)]);
  return out;
}

void check_map(std::span<const int> map, int n) {
  if (static_cast<int>(map.size()) != n)
    throw StructuralError("map has length " + std::to_string(map.size()) +
                          ", expected " + std::to_string(n));
  for (int v : map)
    if (v < 0 || v >= n)
      throw StructuralError("map entry " + std::to_string(v) + " out of range");
}

bool is_permutation(std::span<const int> map) {
  std::vector<char> seen(map.size());
  for (int v : map) {
    if (v < 0 || v >= static_cast<int>(map.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::vector<int> invert_permutation(std::span<const int> pi) {
  std::vector<int> inv(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) inv[pi[i]] = static_cast<int>(i);
  return inv;
}

}  // namespace stybe
