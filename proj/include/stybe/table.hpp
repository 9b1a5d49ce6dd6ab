#pragma once

#include <compare>
#include <span>
#include <vector>

namespace stybe {

/// An N x N table of element indices in 0..N-1, stored row-major.
///
/// Used for binary operations (entry (a, b) is a op b) and for the families
/// of unary maps of a set-theoretic solution (entry (x, y) is sigma_x(y)).
class Table {
 public:
  Table() = default;

  /// Throws StructuralError unless cells.size() == n*n and all entries are
  /// in range.
  Table(int n, std::vector<int> cells);

  static Table from_rows(const std::vector<std::vector<int>>& rows);
  static Table constant(int n, int value);

  int size() const noexcept { return n_; }
  int operator()(int a, int b) const noexcept { return cells_[a * n_ + b]; }
  void set(int a, int b, int value) noexcept { cells_[a * n_ + b] = value; }

  std::span<const int> cells() const noexcept { return cells_; }
  std::span<const int> row(int a) const noexcept {
    return std::span<const int>(cells_).subspan(a * n_, n_);
  }
  std::vector<std::vector<int>> rows() const;

  /// True when every row is a permutation of 0..N-1.
  bool rows_are_bijections() const;
  /// True when every column is a permutation of 0..N-1.
  bool columns_are_bijections() const;

  /// Relabels elements by pi: result(pi[a], pi[b]) = pi[(*this)(a, b)].
  Table relabel(std::span<const int> pi) const;

  auto operator<=>(const Table&) const = default;
  bool operator==(const Table&) const = default;

 private:
  int n_ = 0;
  std::vector<int> cells_;
};

/// Checks that every entry of a length-N map lies in 0..N-1.
void check_map(std::span<const int> map, int n);

/// True when map is a permutation of 0..N-1.
bool is_permutation(std::span<const int> map);

std::vector<int> invert_permutation(std::span<const int> pi);

}  // namespace stybe
