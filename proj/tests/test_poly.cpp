#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "stybe/errors.hpp"
#include "stybe/json_io.hpp"
#include "stybe/poly.hpp"
#include "stybe/poly_matrix.hpp"

using namespace stybe;
using oracle::Q;

namespace {

using Point = std::array<Q, kNumVars>;

Q eval(const Poly& p, const Point& at) {
  Q total = 0;
  for (const auto& [e, c] : p.terms()) {
    Q term = c;
    for (int i = 0; i < kNumVars; ++i)
      for (int k = 0; k < e[i]; ++k) term *= at[i];
    total += term;
  }
  return total;
}

Poly random_poly(std::mt19937& rng, int vars = 3) {
  std::uniform_int_distribution<int> coef(-4, 4), deg(0, 2), var(0, vars - 1), terms(0, 4);
  Poly p;
  for (int t = terms(rng); t > 0; --t) {
    Exponents e{};
    e[var(rng)] = static_cast<std::uint8_t>(deg(rng));
    e[var(rng)] += static_cast<std::uint8_t>(deg(rng));
    p.add_term(e, Q(coef(rng), 1 + std::abs(coef(rng))));
  }
  return p;
}

Point random_point(std::mt19937& rng) {
  std::uniform_int_distribution<int> v(-9, 9), d(1, 5);
  Point p;
  for (auto& q : p) {
    q = Q(v(rng), d(rng));
    q.canonicalize();
  }
  return p;
}

oracle::Dense to_dense(const PolyMatrix& m) {
  oracle::Dense d = oracle::zeros(m.dim());
  for (int r = 0; r < m.dim(); ++r)
    for (const auto& [c, p] : m.rows()[r]) {
      EXPECT_TRUE(p.is_constant());
      d[r][c] = p.constant_term();
    }
  return d;
}

PolyMatrix random_matrix(std::mt19937& rng, std::vector<int> slots) {
  PolyMatrix m(slots);
  std::uniform_int_distribution<int> v(-2, 2);
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) m.set(r, c, Poly(v(rng)));
  return m;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/6"), Q(1, 2));
  EXPECT_EQ(parse_rational("-7"), Q(-7));
  EXPECT_EQ(rational_string(Q(4, 2)), "2");
  EXPECT_EQ(rational_string(Q(-3, 9)), "-1/3");
  EXPECT_THROW(parse_rational("1/0"), StructuralError);
  EXPECT_THROW(parse_rational("x"), StructuralError);
}

TEST(Monomial, KeysRoundTrip) {
  Exponents e{};
  EXPECT_EQ(monomial_key(e), "1");
  e[static_cast<int>(Var::lambda1)] = 2;
  e[static_cast<int>(Var::theta)] = 1;
  EXPECT_EQ(monomial_key(e), "l1^2*t^1");
  EXPECT_EQ(parse_monomial_key("l1^2*t^1"), e);
  EXPECT_THROW(parse_monomial_key("q^1"), StructuralError);
}

TEST(Poly, Printing) {
  const Poly l = Poly::variable(Var::lambda);
  EXPECT_EQ((Poly(1) - l * l).to_string(), "-l^2+1");
  EXPECT_EQ((-(l * l) - Poly(2) * l).to_string(), "-l^2-2*l");
  EXPECT_EQ(Poly().to_string(), "0");
}

TEST(Poly, ArithmeticAgreesWithEvaluation) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    const Point x = random_point(rng);
    EXPECT_EQ(eval(a + b, x), eval(a, x) + eval(b, x));
    EXPECT_EQ(eval(a - b, x), eval(a, x) - eval(b, x));
    EXPECT_EQ(eval(a * b, x), eval(a, x) * eval(b, x));
    EXPECT_EQ(eval(pow(a, 3), x), eval(a, x) * eval(a, x) * eval(a, x));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());

    Point y = x;
    y[static_cast<int>(Var::lambda)] = eval(c, x);
    EXPECT_EQ(eval(a.substitute(Var::lambda, c), x), eval(a, y));
  }
}

TEST(Poly, CoefficientExtraction) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Poly a = random_poly(rng);
    Poly rebuilt;
    for (int k = 0; k <= a.degree(Var::lambda); ++k)
      rebuilt += a.coefficient(Var::lambda, k) * Poly::variable(Var::lambda, k);
    EXPECT_EQ(rebuilt, a);
  }
}

TEST(PolyMatrix, ProductsAgreeWithDenseOracle) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_matrix(rng, {2, 2}), b = random_matrix(rng, {2, 2});
    const auto c = random_matrix(rng, {3});
    EXPECT_EQ(to_dense(a * b), oracle::mul(to_dense(a), to_dense(b)));
    EXPECT_EQ(to_dense(a + b), oracle::add(to_dense(a), to_dense(b)));
    EXPECT_EQ(to_dense(kron(a, c)), oracle::kron(to_dense(a), to_dense(c)));
    EXPECT_EQ(kron(a, c).slots(), (std::vector<int>{2, 2, 3}));
  }
}

TEST(PolyMatrix, PermutationOperator) {
  for (int n = 1; n <= 4; ++n) {
    const auto p = permutation_matrix(n);
    EXPECT_EQ(to_dense(p), oracle::flip(n));
    EXPECT_EQ(p * p, PolyMatrix::identity({n, n}));
  }
}

TEST(PolyMatrix, PartialTranspose) {
  std::mt19937 rng(23);
  const auto a = random_matrix(rng, {2, 3});
  const auto x = random_matrix(rng, {2}), y = random_matrix(rng, {3});
  const auto xy = kron(x, y);
  EXPECT_EQ(partial_transpose(xy, 0), kron(x.transpose(), y));
  EXPECT_EQ(partial_transpose(xy, 1), kron(x, y.transpose()));
  EXPECT_EQ(partial_transpose(partial_transpose(a, 0), 1), a.transpose());
  EXPECT_THROW(partial_transpose(a, 2), StructuralError);
}

TEST(PolyMatrix, ScalarMatch) {
  const Poly l = Poly::variable(Var::lambda);
  EXPECT_EQ(scalar_match((l + Poly(1)) * PolyMatrix::identity({2, 2})), l + Poly(1));
  auto m = PolyMatrix::identity({2});
  m.set(0, 1, Poly(1));
  EXPECT_FALSE(scalar_match(m).has_value());
  m = PolyMatrix::identity({2});
  m.set(1, 1, Poly(2));
  EXPECT_FALSE(scalar_match(m).has_value());
}

TEST(PolyMatrix, EmbedMatchesIndexArithmetic) {
  std::mt19937 rng(31);
  for (int n = 2; n <= 3; ++n) {
    const auto op = random_matrix(rng, {n, n});
    const std::vector<int> space = {n, n, n};
    for (auto [i, j] : {std::pair{0, 1}, {1, 2}, {0, 2}}) {
      const std::array<int, 2> pos = {i, j};
      EXPECT_EQ(to_dense(embed(op, pos, space)), oracle::on_pair(to_dense(op), n, i, j));
    }
    // Reversed positions act through the flipped operator.
    const std::array<int, 2> rev = {1, 0};
    const auto p = permutation_matrix(n);
    EXPECT_EQ(embed(op, rev, {n, n}), p * op * p);
  }
}

TEST(PolyMatrix, SlotPermutationConjugates) {
  std::mt19937 rng(37);
  const auto a = random_matrix(rng, {2}), b = random_matrix(rng, {3}), c = random_matrix(rng, {2});
  const std::vector<int> space = {2, 3, 2};
  const std::array<int, 3> perm = {2, 0, 1};  // factor k goes to position perm[k]
  const auto s = slot_permutation(space, perm);
  EXPECT_EQ(s.slots(), (std::vector<int>{3, 2, 2}));
  EXPECT_EQ(s * kron(kron(a, b), c) * s.transpose(), kron(kron(b, c), a));
}

TEST(PolyMatrix, InverseOfConstantMatrix) {
  std::mt19937 rng(41);
  int invertible = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_matrix(rng, {3});
    const auto inv = inverse(a);
    if (!inv) continue;
    ++invertible;
    EXPECT_EQ(a * *inv, PolyMatrix::identity({3}));
    EXPECT_EQ(*inv * a, PolyMatrix::identity({3}));
  }
  EXPECT_GT(invertible, 10);
  auto singular = PolyMatrix::identity({2});
  singular.set(1, 1, Poly(0));
  EXPECT_FALSE(inverse(singular).has_value());
  EXPECT_THROW(inverse(Poly::variable(Var::mu) * PolyMatrix::identity({2})), StructuralError);
}

TEST(PolyMatrix, FirstDifference) {
  auto a = PolyMatrix::identity({2});
  auto b = a;
  EXPECT_FALSE(first_difference(a, b).has_value());
  b.set(1, 0, Poly(3));
  b.set(1, 1, Poly(5));
  const auto d = first_difference(a, b);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->row, 1);
  EXPECT_EQ(d->col, 0);
  EXPECT_EQ(d->rhs, Poly(3));
}

TEST(Json, PolyAndMatrixRoundTrip) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const Poly p = random_poly(rng, kNumVars);
    EXPECT_EQ(poly_from_json(Json::parse(to_json(p).dump())), p);
    PolyMatrix m({2, 2});
    m.set(trial % 4, (trial / 4) % 4, p);
    EXPECT_EQ(matrix_from_json(to_json(m)), m);
  }
  EXPECT_EQ(poly_from_json(Json::parse(R"({"l": 2, "1": "-1/2"})")),
            Poly(2) * Poly::variable(Var::lambda) + Poly(Q(-1, 2)));
  EXPECT_THROW(poly_from_json(Json::parse(R"({"l": 1.5})")), StructuralError);
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"dim": 2, "entries": [[0, 5, 1]]})")),
               StructuralError);
}
