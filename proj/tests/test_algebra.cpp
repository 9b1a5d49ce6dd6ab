#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "oracle.hpp"
#include "stybe/algebra.hpp"
#include "stybe/errors.hpp"

using namespace stybe;

namespace {

Table xor2() { return Table::from_rows({{0, 1}, {1, 0}}); }

// {0, 2, 4, 6} in Z/8 relabeled 0..3 by halving.
RingTable even_residues_mod8() {
  std::vector<int> add(16), times(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      add[a * 4 + b] = (a + b) % 4;
      times[a * 4 + b] = ((2 * a * 2 * b) % 8) / 2;
    }
  return RingTable(Table(4, add), Table(4, times));
}

bool derived_bool(const StructureReport& r, const std::string& key) {
  return std::get<bool>(r.derived.at(key));
}

}  // namespace

TEST(GroupTable, DetectsGroupsAndNonGroups) {
  EXPECT_TRUE(GroupTable::from_table(cyclic_group_table(5)).has_value());
  // Latin square without associativity.
  Table bad = Table::from_rows({{0, 1, 2}, {1, 0, 2}, {2, 2, 0}});
  EXPECT_FALSE(GroupTable::from_table(bad).has_value());
  const auto z4 = *GroupTable::from_table(cyclic_group_table(4));
  EXPECT_EQ(z4.inverse, (std::vector<int>{0, 3, 2, 1}));
  EXPECT_TRUE(z4.abelian());
  EXPECT_EQ(z4.center().size(), 4u);
}

TEST(Table, RejectsMalformedInput) {
  EXPECT_THROW(Table(2, {0, 1, 2, 0}), StructuralError);
  EXPECT_THROW(Table(2, {0, 1, 1}), StructuralError);
  EXPECT_THROW(NearBrace(xor2(), cyclic_group_table(3), StructureKind::near_brace),
               StructuralError);
}

TEST(VerifyStructure, TrivialBraceOnZ2) {
  const NearBrace nb(xor2(), xor2(), StructureKind::left_brace);
  const auto r = verify_structure(nb, StructureKind::left_brace);
  EXPECT_TRUE(r.valid);
  EXPECT_TRUE(r.failures.empty());
  EXPECT_TRUE(derived_bool(r, "zero_equals_one"));
}

TEST(VerifyStructure, RadicalRingBraceIsValid) {
  const NearBrace nb = brace_from_radical_ring(even_residues_mod8());
  EXPECT_TRUE(verify_structure(nb, StructureKind::left_brace).valid);
  // 2 o 2 = 4 + 2 + 2 = 8 = 0 in Z/8, i.e. index 1 o 1 = 0
  EXPECT_EQ(nb.mul(1, 1), 0);
}

TEST(VerifyStructure, NonAssociativeMultiplicationHasWitness) {
  Table bad = Table::from_rows({{0, 1, 2}, {1, 0, 2}, {2, 2, 0}});
  const NearBrace nb(cyclic_group_table(3), bad, StructureKind::near_brace);
  const auto r = verify_structure(nb, StructureKind::near_brace);
  ASSERT_FALSE(r.valid);
  EXPECT_EQ(r.failures.front().axiom.rfind("mul.", 0), 0u);
  EXPECT_FALSE(r.failures.front().witness.empty());
}

TEST(VerifyStructure, ValidIffNoFailures) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& add : enumerate_group_tables(n))
      for (const auto& mul : enumerate_group_tables(n))
        for (auto level : {StructureKind::left_brace, StructureKind::skew_brace,
                           StructureKind::near_brace, StructureKind::singular_near_brace}) {
          const NearBrace nb(add.op, mul.op, level);
          const auto r = verify_structure(nb, level);
          EXPECT_EQ(r.valid, r.failures.empty());
          EXPECT_EQ(r.valid, satisfies(add, mul, level));
        }
}

TEST(VerifyStructure, NearBraceNeedNotHaveZeroEqualOne) {
  // Z/3 with a o b = a + b + 1 (identity 2): a o (b + c) = ab - a o 0 + ac.
  std::vector<int> mul(9);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) mul[a * 3 + b] = (a + b + 1) % 3;
  const NearBrace nb(cyclic_group_table(3), Table(3, mul), StructureKind::near_brace);
  const auto r = verify_structure(nb, StructureKind::near_brace);
  EXPECT_TRUE(r.valid);
  EXPECT_FALSE(derived_bool(r, "zero_equals_one"));
  EXPECT_FALSE(verify_structure(nb, StructureKind::left_brace).valid);
}

TEST(VerifyStructure, SingularNearBracesSatisfyTheConsequences) {
  for (int n = 1; n <= 4; ++n) {
    int seen = 0;
    for (const auto& nb : enumerate_near_braces(n, StructureKind::singular_near_brace, {})) {
      const auto r = verify_structure(nb, StructureKind::singular_near_brace);
      ASSERT_TRUE(r.valid);
      EXPECT_TRUE(derived_bool(r, "zero_circ_zero_is_minus_one"));
      EXPECT_TRUE(derived_bool(r, "one_plus_one_is_zero_inverse"));
      EXPECT_TRUE(derived_bool(r, "one_plus_a_is_a_plus_one"));
      ++seen;
    }
    EXPECT_GT(seen, 0);
  }
}

TEST(VerifyStructure, LeftBracesSatisfyTheBraceLaw) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& nb : enumerate_near_braces(n, StructureKind::left_brace, {})) {
      const auto add = *GroupTable::from_table(nb.add);
      const auto mul = *GroupTable::from_table(nb.mul);
      ASSERT_EQ(add.identity, mul.identity);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            ASSERT_EQ(mul(a, add(b, c)), add(add(mul(a, b), add.inverse[a]), mul(a, c)));
    }
}

TEST(RadicalRing, ZeroRingGivesTrivialBrace) {
  const RingTable ring(cyclic_group_table(5), Table::constant(5, 0));
  const NearBrace nb = brace_from_radical_ring(ring);
  EXPECT_EQ(nb.mul, cyclic_group_table(5));
  EXPECT_TRUE(verify_structure(nb, StructureKind::left_brace).valid);
}

TEST(RadicalRing, UnitalZ2IsNotRadical) {
  const RingTable ring(xor2(), Table::from_rows({{0, 0}, {0, 1}}));
  try {
    brace_from_radical_ring(ring);
    FAIL() << "expected NotRadicalRing";
  } catch (const NotRadicalRing& e) {
    EXPECT_EQ(e.element(), 1);
  }
}

TEST(RadicalRing, RingAxiomFailureIsRefused) {
  const RingTable ring(xor2(), Table::from_rows({{1, 0}, {0, 0}}));
  EXPECT_FALSE(verify_ring(ring).valid);
  EXPECT_THROW(brace_from_radical_ring(ring), Refusal);
}

TEST(RadicalRing, NilpotentRingsRoundTrip) {
  // Zero multiplication on Z/n.
  for (int n : {2, 3, 4}) {
    const RingTable ring(cyclic_group_table(n), Table::constant(n, 0));
    EXPECT_TRUE(verify_structure(brace_from_radical_ring(ring), StructureKind::left_brace).valid);
  }
}

TEST(GroupEnumeration, MatchesExhaustiveCount) {
  for (int n = 1; n <= 3; ++n)
    EXPECT_EQ(static_cast<int>(enumerate_group_tables(n).size()), oracle::count_group_tables(n))
        << "n = " << n;
  // Labeled counts n! / |Aut(G)| summed over isomorphism types.
  EXPECT_EQ(enumerate_group_tables(4).size(), 16u);
  EXPECT_EQ(enumerate_group_tables(5).size(), 30u);
  EXPECT_EQ(enumerate_group_tables(6).size(), 480u);
}

TEST(BraceEnumeration, SmallCounts) {
  EnumerationOptions canonical;
  canonical.canonical = true;
  const std::vector<std::size_t> expected = {1, 1, 1, 4, 1, 2};
  for (int n = 1; n <= 6; ++n)
    EXPECT_EQ(enumerate_near_braces(n, StructureKind::left_brace, canonical).size(),
              expected[n - 1])
        << "n = " << n;
}

TEST(BraceEnumeration, LabeledSizeTwoHasOneBrace) {
  // With zero = one = 0 the only labeled group on {0, 1} is xor.
  int count = 0;
  for (const auto& nb : enumerate_near_braces(2, StructureKind::left_brace, {})) {
    const auto add = *GroupTable::from_table(nb.add);
    if (add.identity == 0) ++count;
  }
  EXPECT_EQ(count, 1);
}

TEST(BraceEnumeration, ContainsRadicalRingBrace) {
  const NearBrace target = canonical_form(brace_from_radical_ring(even_residues_mod8()));
  EnumerationOptions canonical;
  canonical.canonical = true;
  const auto all = enumerate_near_braces(4, StructureKind::left_brace, canonical);
  EXPECT_NE(std::find(all.begin(), all.end(), target), all.end());
}

TEST(BraceEnumeration, ShuffledSearchGivesSameClasses) {
  for (auto level : {StructureKind::left_brace, StructureKind::near_brace}) {
    for (int n = 2; n <= 4; ++n) {
      EnumerationOptions plain, shuffled;
      plain.canonical = shuffled.canonical = true;
      shuffled.shuffle_seed = 12345u + n;
      shuffled.jobs = 2;
      EXPECT_EQ(enumerate_near_braces(n, level, plain),
                enumerate_near_braces(n, level, shuffled));
    }
  }
}

TEST(BraceEnumeration, LabeledOutputIsDeterministic) {
  EnumerationOptions one, many;
  many.jobs = 3;
  EXPECT_EQ(enumerate_near_braces(4, StructureKind::near_brace, one),
            enumerate_near_braces(4, StructureKind::near_brace, many));
}

TEST(BraceEnumeration, BoundIsEnforced) {
  EXPECT_THROW(enumerate_near_braces(7, StructureKind::left_brace, {}), Refusal);
  EXPECT_THROW(enumerate_near_braces(5, StructureKind::near_brace, {}), Refusal);
  EnumerationOptions raised;
  raised.max_size = 5;
  EXPECT_NO_THROW(enumerate_near_braces(5, StructureKind::near_brace, raised));
}

TEST(CanonicalForm, InvariantUnderRelabeling) {
  std::mt19937 rng(7);
  for (const auto& nb : enumerate_near_braces(4, StructureKind::near_brace, {})) {
    std::vector<int> pi(4);
    std::iota(pi.begin(), pi.end(), 0);
    std::shuffle(pi.begin(), pi.end(), rng);
    EXPECT_EQ(canonical_form(nb), canonical_form(relabel(nb, pi)));
  }
}
