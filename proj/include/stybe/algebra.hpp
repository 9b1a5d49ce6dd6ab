#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "stybe/table.hpp"

namespace stybe {

/// A finite group given by its Cayley table, with identity and inverses
/// precomputed.
struct GroupTable {
  Table op;
  int identity = 0;
  std::vector<int> inverse;

  /// Returns nullopt unless op is associative with a two-sided identity and
  /// two-sided inverses.
  static std::optional<GroupTable> from_table(const Table& op);

  int size() const noexcept { return op.size(); }
  int operator()(int a, int b) const noexcept { return op(a, b); }
  bool abelian() const;
  /// Elements c with c*x == x*c for all x.
  std::vector<int> center() const;
};

/// Levels of structure that can be requested from verify_structure. The kind
/// tag of a NearBrace uses the same values.
enum class StructureKind {
  left_brace,           // abelian +, 0 == 1, a(b+c) = ab - a + ac
  left_skew_brace,      // as above without commutativity of +
  skew_brace,           // left skew brace with (b+c)a = ba - a + ca
  near_brace,           // a(b+c) = ab - a0 + ac, 0 and 1 may differ
  singular_near_brace,  // near brace with a - a0 = 1 = -a0 + a
};

std::string_view to_string(StructureKind kind);
/// Throws StructuralError on an unknown name.
StructureKind parse_structure_kind(std::string_view name);

/// A pair of binary operations (B, +) and (B, o) on 0..N-1. The tables are
/// raw: group axioms are established by verify_structure, not assumed.
struct NearBrace {
  Table add;
  Table mul;
  StructureKind kind = StructureKind::near_brace;

  /// Throws StructuralError if the tables differ in size.
  NearBrace(Table add_table, Table mul_table, StructureKind k);

  int size() const noexcept { return add.size(); }
  bool operator==(const NearBrace& other) const {
    return add == other.add && mul == other.mul;
  }
};

/// An associative ring without unit: abelian (N, +) and a bi-distributive
/// product.
struct RingTable {
  Table add;
  Table times;

  RingTable(Table add_table, Table times_table);
  int size() const noexcept { return add.size(); }
};

struct Failure {
  std::string axiom;
  std::vector<int> witness;

  bool operator==(const Failure&) const = default;
};

using DerivedValue = std::variant<bool, int, std::vector<int>>;

struct StructureReport {
  bool valid = true;
  std::vector<Failure> failures;
  std::map<std::string, DerivedValue> derived;

  void fail(std::string axiom, std::vector<int> witness) {
    valid = false;
    failures.push_back({std::move(axiom), std::move(witness)});
  }
};

/// Exhaustively checks every axiom of the requested level. Each failing axiom
/// is reported once, with its lexicographically first witness.
StructureReport verify_structure(const NearBrace& nb, StructureKind level);

/// Checks the ring axioms of a RingTable.
StructureReport verify_ring(const RingTable& ring);

/// Left brace with a o b = a*b + a + b. Throws Refusal when the ring axioms
/// fail and NotRadicalRing naming the first element without a quasi-inverse.
NearBrace brace_from_radical_ring(const RingTable& ring);

/// Fast yes/no form of verify_structure used by the enumerators.
bool satisfies(const GroupTable& add, const GroupTable& mul,
               StructureKind level);

/// Relabels both tables by pi (pi maps old index to new index).
NearBrace relabel(const NearBrace& nb, std::span<const int> pi);

/// Lexicographically minimal (add, mul) pair over all relabelings.
NearBrace canonical_form(const NearBrace& nb);

struct EnumerationOptions {
  bool canonical = false;
  /// Largest accepted size; 0 selects the default for the level (6 for the
  /// brace levels, 4 for the near-brace levels).
  int max_size = 0;
  unsigned jobs = 1;
  /// When set, the search visits candidate tables in a shuffled order.
  std::optional<std::uint64_t> shuffle_seed;
};

int default_size_bound(StructureKind level);

/// All group tables on 0..n-1 (every labeling), in a deterministic order.
/// Found by backtracking over Latin squares with incremental associativity
/// checks. Results are cached per n.
const std::vector<GroupTable>& enumerate_group_tables(int n);

/// Visits every structure of the requested level on 0..n-1. Labeled mode
/// streams in search order; canonical mode emits one representative per
/// isomorphism class in increasing canonical order. Throws Refusal when n
/// exceeds the bound.
void for_each_near_brace(int n, StructureKind level,
                         const EnumerationOptions& options,
                         const std::function<void(const NearBrace&)>& sink);

std::vector<NearBrace> enumerate_near_braces(int n, StructureKind level,
                                             const EnumerationOptions& options);

/// Z/n under addition, a convenience for tests and examples.
Table cyclic_group_table(int n);

}  // namespace stybe
