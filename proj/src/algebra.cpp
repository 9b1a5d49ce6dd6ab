#include "stybe/algebra.hpp"

#include <algorithm>
#include <numeric>

#include "stybe/errors.hpp"

namespace stybe {

namespace {

// First witness of a failed group axiom, or nullopt for a group.
std::optional<Failure> group_failure(const Table& op, const std::string& name) {
  const int n = op.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (op(op(a, b), c) != op(a, op(b, c)))
          return Failure{name + ".associativity", {a, b, c}};
  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = op(e, x) == x && op(x, e) == x;
    if (ok) identity = e;
  }
  if (identity < 0) return Failure{name + ".identity", {}};
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n && !found; ++b)
      found = op(a, b) == identity && op(b, a) == identity;
    if (!found) return Failure{name + ".inverse", {a}};
  }
  return std::nullopt;
}

// Shorthand for the additive structure used in the distributivity laws.
struct Additive {
  const GroupTable& g;
  int operator()(int a, int b) const { return g(a, b); }
  int neg(int a) const { return g.inverse[a]; }
};

}  // namespace

std::optional<GroupTable> GroupTable::from_table(const Table& op) {
  if (group_failure(op, "op")) return std::nullopt;
  const int n = op.size();
  GroupTable g{op, 0, std::vector<int>(n)};
  for (int e = 0; e < n; ++e)
    if (op(e, 0) == 0 && op(0, e) == 0) {
      g.identity = e;
      break;
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (op(a, b) == g.identity) g.inverse[a] = b;
  return g;
}

bool GroupTable::abelian() const {
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

std::vector<int> GroupTable::center() const {
  std::vector<int> out;
  for (int c = 0; c < size(); ++c) {
    bool central = true;
    for (int x = 0; x < size() && central; ++x) central = op(c, x) == op(x, c);
    if (central) out.push_back(c);
  }
  return out;
}

std::string_view to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::left_brace: return "left_brace";
    case StructureKind::left_skew_brace: return "left_skew_brace";
    case StructureKind::skew_brace: return "skew_brace";
    case StructureKind::near_brace: return "near_brace";
    case StructureKind::singular_near_brace: return "singular_near_brace";
  }
  return "near_brace";
}

StructureKind parse_structure_kind(std::string_view name) {
  for (auto k : {StructureKind::left_brace, StructureKind::left_skew_brace,
                 StructureKind::skew_brace, StructureKind::near_brace,
                 StructureKind::singular_near_brace})
    if (to_string(k) == name) return k;
  throw StructuralError("unknown structure kind '" + std::string(name) + "'");
}

NearBrace::NearBrace(Table add_table, Table mul_table, StructureKind k)
    : add(std::move(add_table)), mul(std::move(mul_table)), kind(k) {
  if (add.size() != mul.size())
    throw StructuralError("add and mul tables differ in size");
}

RingTable::RingTable(Table add_table, Table times_table)
    : add(std::move(add_table)), times(std::move(times_table)) {
  if (add.size() != times.size())
    throw StructuralError("add and times tables differ in size");
}

StructureReport verify_structure(const NearBrace& nb, StructureKind level) {
  StructureReport report;
  const int n = nb.size();

  if (auto f = group_failure(nb.add, "add")) report.fail(f->axiom, f->witness);
  if (auto f = group_failure(nb.mul, "mul")) report.fail(f->axiom, f->witness);
  if (!report.valid) return report;

  const GroupTable add = *GroupTable::from_table(nb.add);
  const GroupTable mul = *GroupTable::from_table(nb.mul);
  const Additive plus{add};
  const int zero = add.identity;
  const int one = mul.identity;

  report.derived["zero"] = zero;
  report.derived["one"] = one;
  report.derived["zero_equals_one"] = zero == one;
  report.derived["add_abelian"] = add.abelian();
  report.derived["mul_abelian"] = mul.abelian();

  // phi(a) = -(a o 0), phi_hat(0) = -(0 o 0)
  std::vector<int> phi(n);
  for (int a = 0; a < n; ++a) phi[a] = plus.neg(mul(a, zero));
  report.derived["phi"] = phi;
  report.derived["phi_hat_zero"] = plus.neg(mul(zero, zero));

  bool singular = true;
  for (int a = 0; a < n && singular; ++a)
    singular = plus(a, phi[a]) == one && plus(phi[a], a) == one;
  report.derived["singular"] = singular;
  report.derived["zero_circ_zero_is_minus_one"] =
      mul(zero, zero) == plus.neg(one);
  report.derived["one_plus_one_is_zero_inverse"] =
      plus(one, one) == mul.inverse[zero];
  bool one_central = true;
  for (int a = 0; a < n && one_central; ++a)
    one_central = plus(one, a) == plus(a, one);
  report.derived["one_plus_a_is_a_plus_one"] = one_central;

  auto check_triples = [&](const std::string& axiom, auto&& holds) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (!holds(a, b, c)) {
            report.fail(axiom, {a, b, c});
            return;
          }
  };
  auto left_law = [&](int a, int b, int c) {
    return mul(a, plus(b, c)) == plus(plus(mul(a, b), plus.neg(a)), mul(a, c));
  };
  auto right_law = [&](int a, int b, int c) {
    return mul(plus(b, c), a) == plus(plus(mul(b, a), plus.neg(a)), mul(c, a));
  };
  auto near_law = [&](int a, int b, int c) {
    return mul(a, plus(b, c)) ==
           plus(plus(mul(a, b), phi[a]), mul(a, c));
  };
  auto require_zero_is_one = [&] {
    if (zero != one) report.fail("zero_equals_one", {zero, one});
  };
  auto require_abelian_add = [&] {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (add(a, b) != add(b, a)) {
          report.fail("add.commutativity", {a, b});
          return;
        }
  };

  switch (level) {
    case StructureKind::left_brace:
      require_abelian_add();
      require_zero_is_one();
      check_triples("left_distributivity", left_law);
      break;
    case StructureKind::left_skew_brace:
      require_zero_is_one();
      check_triples("left_distributivity", left_law);
      break;
    case StructureKind::skew_brace:
      require_zero_is_one();
      check_triples("left_distributivity", left_law);
      check_triples("right_distributivity", right_law);
      break;
    case StructureKind::near_brace:
      check_triples("near_distributivity", near_law);
      break;
    case StructureKind::singular_near_brace: {
      check_triples("near_distributivity", near_law);
      for (int a = 0; a < n; ++a)
        if (plus(a, phi[a]) != one) {
          report.fail("singular_right", {a});
          break;
        }
      for (int a = 0; a < n; ++a)
        if (plus(phi[a], a) != one) {
          report.fail("singular_left", {a});
          break;
        }
      // Consequences that every singular near brace must exhibit.
      if (mul(zero, zero) != plus.neg(one))
        report.fail("zero_circ_zero_is_minus_one", {zero});
      if (plus(one, one) != mul.inverse[zero])
        report.fail("one_plus_one_is_zero_inverse", {one});
      for (int a = 0; a < n; ++a)
        if (plus(one, a) != plus(a, one)) {
          report.fail("one_plus_a_is_a_plus_one", {a});
          break;
        }
      break;
    }
  }
  return report;
}

bool satisfies(const GroupTable& add, const GroupTable& mul,
               StructureKind level) {
  const int n = add.size();
  const Additive plus{add};
  const int zero = add.identity;
  const bool brace_level = level == StructureKind::left_brace ||
                           level == StructureKind::left_skew_brace ||
                           level == StructureKind::skew_brace;
  if (brace_level && zero != mul.identity) return false;
  if (level == StructureKind::left_brace && !add.abelian()) return false;

  std::vector<int> phi(n);
  for (int a = 0; a < n; ++a)
    phi[a] = brace_level ? plus.neg(a) : plus.neg(mul(a, zero));

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = mul(a, b);
      for (int c = 0; c < n; ++c)
        if (mul(a, plus(b, c)) != plus(plus(ab, phi[a]), mul(a, c)))
          return false;
    }
  if (level == StructureKind::skew_brace) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul(plus(b, c), a) !=
              plus(plus(mul(b, a), plus.neg(a)), mul(c, a)))
            return false;
  }
  if (level == StructureKind::singular_near_brace) {
    const int one = mul.identity;
    for (int a = 0; a < n; ++a)
      if (plus(a, phi[a]) != one || plus(phi[a], a) != one) return false;
  }
  return true;
}

StructureReport verify_ring(const RingTable& ring) {
  StructureReport report;
  const int n = ring.size();
  if (auto f = group_failure(ring.add, "add")) {
    report.fail(f->axiom, f->witness);
    return report;
  }
  const GroupTable add = *GroupTable::from_table(ring.add);
  for (int a = 0; a < n && report.valid; ++a)
    for (int b = a + 1; b < n; ++b)
      if (add(a, b) != add(b, a)) {
        report.fail("add.commutativity", {a, b});
        break;
      }
  const Table& t = ring.times;
  auto check = [&](const std::string& axiom, auto&& holds) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (!holds(a, b, c)) {
            report.fail(axiom, {a, b, c});
            return;
          }
  };
  check("times.associativity",
        [&](int a, int b, int c) { return t(t(a, b), c) == t(a, t(b, c)); });
  check("left_distributivity", [&](int a, int b, int c) {
    return t(a, add(b, c)) == add(t(a, b), t(a, c));
  });
  check("right_distributivity", [&](int a, int b, int c) {
    return t(add(b, c), a) == add(t(b, a), t(c, a));
  });
  report.derived["zero"] = add.identity;
  return report;
}

NearBrace brace_from_radical_ring(const RingTable& ring) {
  const auto report = verify_ring(ring);
  if (!report.valid)
    throw Refusal("ring axiom '" + report.failures.front().axiom +
                  "' fails; a brace needs an associative ring");
  const int n = ring.size();
  const GroupTable add = *GroupTable::from_table(ring.add);
  std::vector<int> circle(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      circle[a * n + b] = add(add(ring.times(a, b), a), b);
  Table mul(n, std::move(circle));
  const int zero = add.identity;
  for (int a = 0; a < n; ++a) {
    bool invertible = false;
    for (int b = 0; b < n && !invertible; ++b)
      invertible = mul(a, b) == zero && mul(b, a) == zero;
    if (!invertible) throw NotRadicalRing(a);
  }
  return NearBrace(ring.add, std::move(mul), StructureKind::left_brace);
}

NearBrace relabel(const NearBrace& nb, std::span<const int> pi) {
  return NearBrace(nb.add.relabel(pi), nb.mul.relabel(pi), nb.kind);
}

NearBrace canonical_form(const NearBrace& nb) {
  const int n = nb.size();
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  NearBrace best = nb;
  do {
    NearBrace candidate = relabel(nb, pi);
    if (std::tie(candidate.add, candidate.mul) < std::tie(best.add, best.mul))
      best = std::move(candidate);
  } while (std::next_permutation(pi.begin(), pi.end()));
  return best;
}

Table cyclic_group_table(int n) {
  std::vector<int> cells(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) cells[a * n + b] = (a + b) % n;
  return Table(n, std::move(cells));
}

}  // namespace stybe
