#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "stybe/poly.hpp"

namespace stybe {

/// Square matrix with polynomial entries on a tensor space.
///
/// The slot list records the factor dimensions; dim() is their product. Basis
/// vectors of V_1 x ... x V_d are ordered lexicographically, so e_x (x) e_y
/// has index x * dim(V_2) + y for two factors. Storage is sparse by row.
class PolyMatrix {
 public:
  using Row = std::map<int, Poly>;

  PolyMatrix() = default;
  /// Zero matrix on the given factor dimensions.
  explicit PolyMatrix(std::vector<int> slots);

  static PolyMatrix zero(std::vector<int> slots) { return PolyMatrix(std::move(slots)); }
  static PolyMatrix identity(std::vector<int> slots);
  /// e_{row,col} on a single factor of dimension n.
  static PolyMatrix unit(int n, int row, int col);

  int dim() const noexcept { return dim_; }
  const std::vector<int>& slots() const noexcept { return slots_; }
  const std::vector<Row>& rows() const noexcept { return rows_; }

  /// Entry (r, c); zero when absent.
  Poly at(int r, int c) const;
  void set(int r, int c, Poly value);
  void add_to(int r, int c, const Poly& value);
  std::size_t nonzeros() const;

  bool is_zero() const;
  bool is_constant() const;
  int degree(Var v) const;

  PolyMatrix& operator+=(const PolyMatrix& other);
  PolyMatrix& operator-=(const PolyMatrix& other);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const Poly& s, const PolyMatrix& a);

  PolyMatrix transpose() const;
  PolyMatrix substitute(Var v, const Poly& value) const;
  /// Entrywise coefficient of v^k.
  PolyMatrix coefficient(Var v, int k) const;
  /// Same entries, different factorization of the same dimension.
  PolyMatrix with_slots(std::vector<int> slots) const;

  bool operator==(const PolyMatrix& other) const;
  bool operator!=(const PolyMatrix& other) const { return !(*this == other); }

 private:
  int dim_ = 0;
  std::vector<int> slots_;
  std::vector<Row> rows_;
};

/// Kronecker product; the slot list is the concatenation.
PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b);

/// P = sum_{x,y} e_{x,y} (x) e_{y,x} on C^N (x) C^N.
PolyMatrix permutation_matrix(int n);

/// Transposes the indices of one tensor factor. Throws StructuralError when
/// the slot does not exist.
PolyMatrix partial_transpose(const PolyMatrix& a, int slot);

/// c when a == c * I exactly, otherwise nullopt.
std::optional<Poly> scalar_match(const PolyMatrix& a);

/// Places op, whose factors act on positions[0], positions[1], ... of the
/// space with factor dimensions `space`, tensored with the identity on the
/// remaining factors. Throws StructuralError on mismatched dimensions.
PolyMatrix embed(const PolyMatrix& op, std::span<const int> positions,
                 const std::vector<int>& space);

/// Moves factor k of the space to position perm[k]:
/// e_{i_0} (x) ... (x) e_{i_{d-1}} maps to the product with i_k in slot perm[k].
PolyMatrix slot_permutation(const std::vector<int>& space, std::span<const int> perm);

/// Exact inverse of a constant matrix by Gauss-Jordan elimination; nullopt
/// when singular. Throws StructuralError when an entry is not constant.
std::optional<PolyMatrix> inverse(const PolyMatrix& a);

struct EntryDiff {
  int row = 0;
  int col = 0;
  Poly lhs;
  Poly rhs;
};

/// First differing entry in row-major order, nullopt when a == b.
std::optional<EntryDiff> first_difference(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace stybe
