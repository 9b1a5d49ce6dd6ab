#include "stybe/quantum.hpp"

#include <numeric>

#include "stybe/errors.hpp"

namespace stybe {

namespace {

const Poly kLambda = Poly::variable(Var::lambda);

std::vector<int> range(int first, int last) {
  std::vector<int> v(static_cast<std::size_t>(std::max(0, last - first)));
  std::iota(v.begin(), v.end(), first);
  return v;
}

// Space aux (x) aux (x) quantum for an operator on aux (x) quantum.
std::vector<int> doubled_space(const std::vector<int>& op_slots) {
  std::vector<int> space{op_slots[0], op_slots[0]};
  space.insert(space.end(), op_slots.begin() + 1, op_slots.end());
  return space;
}

// Positions of an aux (x) quantum operator acting on the first (which = 0) or
// second (which = 1) auxiliary factor of doubled_space.
std::vector<int> aux_positions(std::size_t op_factors, int which) {
  std::vector<int> pos{which};
  for (std::size_t k = 1; k < op_factors; ++k) pos.push_back(static_cast<int>(k) + 1);
  return pos;
}

OrderCheck order_check(int n, int m, const PolyMatrix& lhs, const PolyMatrix& rhs) {
  OrderCheck c{n, m, true, std::nullopt};
  if (auto diff = first_difference(lhs, rhs)) {
    c.pass = false;
    c.witness = std::move(*diff);
  }
  return c;
}

void require_aux(const LinearSolution& lin, const std::vector<int>& slots) {
  if (slots.empty() || slots[0] != lin.n)
    throw StructuralError("auxiliary factor has dimension " +
                          (slots.empty() ? std::string("?") : std::to_string(slots[0])) +
                          ", solution has N = " + std::to_string(lin.n));
}

// Block (z, w) of an aux (x) quantum operator, as a matrix on the quantum
// factors.
PolyMatrix block(const PolyMatrix& a, int q, int z, int w) {
  std::vector<int> qslots(a.slots().begin() + 1, a.slots().end());
  if (qslots.empty()) qslots = {1};
  PolyMatrix b(qslots);
  for (int i = 0; i < q; ++i)
    for (const auto& [c, p] : a.rows()[z * q + i])
      if (c / q == w) b.set(i, c % q, p);
  return b;
}

// Multiplies every monomial l^j by m^(d - j) and drops l.
PolyMatrix lambda_to_mu(const PolyMatrix& a, int d) {
  PolyMatrix out(a.slots());
  const int li = static_cast<int>(Var::lambda), mi = static_cast<int>(Var::mu);
  for (int r = 0; r < a.dim(); ++r)
    for (const auto& [c, p] : a.rows()[r]) {
      Poly q;
      for (const auto& [key, coeff] : p.terms()) {
        Exponents e = key;
        if (e[mi]) throw StructuralError("operator already depends on m");
        e[mi] = static_cast<std::uint8_t>(d - e[li]);
        e[li] = 0;
        q.add_term(e, coeff);
      }
      out.set(r, c, q);
    }
  return out;
}

}  // namespace

const std::vector<int>& SeriesOperator::slots() const {
  if (coeffs.empty()) throw StructuralError("series has no coefficients");
  return coeffs.front().slots();
}

int SeriesOperator::quantum_dim() const {
  const auto& s = slots();
  return std::accumulate(s.begin() + 1, s.end(), 1, std::multiplies<>());
}

PolyMatrix SeriesOperator::at(int n) const {
  if (n >= 0 && n < static_cast<int>(coeffs.size())) return coeffs[n];
  return PolyMatrix(slots());
}

void SeriesOperator::validate() const {
  const auto& s = slots();
  if (s.size() < 1) throw StructuralError("series coefficients need an auxiliary factor");
  for (const auto& c : coeffs) {
    if (c.slots() != s) throw StructuralError("series coefficients disagree in shape");
    if (!c.is_constant()) throw StructuralError("series coefficients must be constant");
  }
}

SeriesOperator fundamental_series(const LinearSolution& lin, int depth) {
  SeriesOperator l;
  l.coeffs = {lin.r, lin.perm};
  for (int k = 2; k <= depth; ++k) l.coeffs.emplace_back(lin.r.slots());
  l.exact = true;
  return l;
}

SeriesOperator series_from_mu(const PolyMatrix& a) {
  for (Var v : {Var::lambda, Var::lambda1, Var::lambda2})
    if (a.degree(v) > 0)
      throw StructuralError("operator depends on a spectral variable other than m");
  SeriesOperator s;
  const int d = a.degree(Var::mu);
  for (int k = 0; k <= d; ++k) s.coeffs.push_back(a.coefficient(Var::mu, k));
  s.exact = true;
  return s;
}

bool RttReport::pass() const {
  for (const auto& c : matrix)
    if (!c.pass) return false;
  for (const auto& c : component)
    if (!c.pass) return false;
  return component_agrees && fund2b_agrees;
}

RttReport check_rtt_series(const LinearSolution& lin, const SeriesOperator& l,
                           int max_order) {
  l.validate();
  require_aux(lin, l.slots());
  if (max_order < 0) throw StructuralError("max order must be non-negative");
  const int n_aux = lin.n;
  const int q = l.quantum_dim();
  const auto& lslots = l.slots();
  const std::vector<int> space = doubled_space(lslots);
  const auto pos1 = aux_positions(lslots.size(), 0);
  const auto pos2 = aux_positions(lslots.size(), 1);
  constexpr std::array<int, 2> p12{0, 1};
  const PolyMatrix r = embed(lin.r_check, p12, space);

  std::vector<PolyMatrix> l1, l2;
  std::vector<std::vector<PolyMatrix>> blocks;  // blocks[k][z * N + w]
  for (int k = 0; k <= max_order + 1; ++k) {
    const PolyMatrix c = l.at(k);
    l1.push_back(embed(c, pos1, space));
    l2.push_back(embed(c, pos2, space));
    auto& bk = blocks.emplace_back();
    for (int z = 0; z < n_aux; ++z)
      for (int w = 0; w < n_aux; ++w) bk.push_back(block(c, q, z, w));
  }
  auto bl = [&](int k, int z, int w) -> const PolyMatrix& { return blocks[k][z * n_aux + w]; };

  // Pairs (p, q) sent by the set map to (w, w^).
  std::vector<std::vector<std::pair<int, int>>> preimage(n_aux * n_aux);
  for (int p = 0; p < n_aux; ++p)
    for (int pq = 0; pq < n_aux; ++pq) {
      const auto [s, t] = lin.source.apply(p, pq);
      preimage[s * n_aux + t].emplace_back(p, pq);
    }

  RttReport report;
  report.fund2b_applicable = lin.r_check == lin.perm;
  for (int n = 0; n <= max_order; ++n)
    for (int m = 0; m <= max_order; ++m) {
      const PolyMatrix lhs = r * (l1[n + 1] * l2[m] - l1[n] * l2[m + 1]) + l1[n] * l2[m];
      const PolyMatrix rhs = (l1[m] * l2[n + 1] - l1[m + 1] * l2[n]) * r + l1[m] * l2[n];
      report.matrix.push_back(order_check(n, m, lhs, rhs));

      PolyMatrix residual(space);
      bool fund2b_ok = true;
      for (int z = 0; z < n_aux; ++z)
        for (int zh = 0; zh < n_aux; ++zh) {
          const auto [s, t] = lin.source.apply(z, zh);
          for (int w = 0; w < n_aux; ++w)
            for (int wh = 0; wh < n_aux; ++wh) {
              PolyMatrix b = bl(n + 1, s, w) * bl(m, t, wh) - bl(n, s, w) * bl(m + 1, t, wh) +
                             bl(n, z, w) * bl(m, zh, wh);
              for (const auto& [p, pq] : preimage[w * n_aux + wh])
                b -= bl(m, z, p) * bl(n + 1, zh, pq) - bl(m + 1, z, p) * bl(n, zh, pq);
              b -= bl(m, z, w) * bl(n, zh, wh);

              if (report.fund2b_applicable) {
                // i = z^, j = w, k = z, l = w^
                auto commutator = [](const PolyMatrix& a, const PolyMatrix& c) {
                  return a * c - c * a;
                };
                const PolyMatrix f2b = commutator(bl(n + 1, zh, w), bl(m, z, wh)) -
                                       commutator(bl(n, zh, w), bl(m + 1, z, wh)) -
                                       bl(m, z, w) * bl(n, zh, wh) +
                                       bl(n, z, w) * bl(m, zh, wh);
                if (f2b != b) fund2b_ok = false;
              }
              const int row0 = (z * n_aux + zh) * q, col0 = (w * n_aux + wh) * q;
              for (int i = 0; i < q; ++i)
                for (const auto& [c, p] : b.rows()[i]) residual.set(row0 + i, col0 + c, p);
            }
        }
      report.component.push_back(order_check(n, m, residual, PolyMatrix(space)));
      if (residual != lhs - rhs) report.component_agrees = false;
      if (!fund2b_ok) report.fund2b_agrees = false;
    }
  return report;
}

SeriesOperator coproduct_series(const SeriesOperator& l) {
  l.validate();
  const auto& s = l.slots();
  const std::size_t d = s.size() - 1;  // quantum factors
  std::vector<int> space = s;
  space.insert(space.end(), s.begin() + 1, s.end());
  std::vector<int> pos12{0}, pos13{0};
  for (std::size_t k = 0; k < d; ++k) {
    pos12.push_back(static_cast<int>(1 + k));
    pos13.push_back(static_cast<int>(1 + d + k));
  }
  std::vector<PolyMatrix> a12, a13;
  for (const auto& c : l.coeffs) {
    a12.push_back(embed(c, pos12, space));
    a13.push_back(embed(c, pos13, space));
  }
  SeriesOperator t;
  t.exact = l.exact;
  const int depth = l.depth();
  for (int k = 0; k <= 2 * depth; ++k) {
    PolyMatrix sum(space);
    for (int a = std::max(0, k - depth); a <= std::min(k, depth); ++a)
      sum += a13[a] * a12[k - a];
    t.coeffs.push_back(std::move(sum));
  }
  if (!t.exact) t.coeffs.resize(static_cast<std::size_t>(depth) + 1, PolyMatrix(space));
  return t;
}

Dressed dress_reflection(const LinearSolution& lin, const DressParams& params) {
  if (!lin.involutive)
    throw Refusal("dressing needs an involutive solution (the inverse of L uses unitarity)");
  const int n = lin.n;
  if (params.k0.dim() != n)
    throw StructuralError("boundary matrix has dimension " + std::to_string(params.k0.dim()) +
                          ", expected " + std::to_string(n));
  const PolyMatrix k0 = params.k0.with_slots({n});
  const Poly theta = params.theta ? Poly(*params.theta) : Poly::variable(Var::theta1);
  const PolyMatrix r21 = lin.perm * lin.r * lin.perm;

  Dressed out;
  out.lambda_form = ((kLambda - theta) * lin.r + lin.perm) *
                    kron(k0, PolyMatrix::identity({n})) *
                    ((kLambda + theta) * r21 + lin.perm);
  out.degree = out.lambda_form.degree(Var::lambda);
  out.mu_form = lambda_to_mu(out.lambda_form, out.degree);
  const Poly u = kLambda + theta;
  out.normalization = {
      "L(-u)^-1 = (u r21 + P) / (" + (Poly(1) - u * u).to_string() + "), u = " +
          u.to_string() + "; the denominator is dropped",
      "mu form = lambda form * m^" + std::to_string(out.degree) + " with l = 1/m"};
  return out;
}

PolyMatrix coproduct_reflection(const LinearSolution& lin, const PolyMatrix& k) {
  if (!lin.involutive)
    throw Refusal("dressing needs an involutive solution (the inverse of L uses unitarity)");
  require_aux(lin, k.slots());
  std::vector<int> space = k.slots();
  space.push_back(lin.n);
  const std::vector<int> pos_l{0, static_cast<int>(space.size()) - 1};
  const Poly theta2 = Poly::variable(Var::theta2);
  const PolyMatrix r21 = lin.perm * lin.r * lin.perm;
  const PolyMatrix left = embed((kLambda - theta2) * lin.r + lin.perm, pos_l, space);
  const PolyMatrix right = embed((kLambda + theta2) * r21 + lin.perm, pos_l, space);
  return left * embed(k, range(0, static_cast<int>(k.slots().size())), space) * right;
}

ReflectionEquationReport check_reflection_equation(const LinearSolution& lin,
                                                   const PolyMatrix& k, ReMode mode) {
  require_aux(lin, k.slots());
  const std::vector<int> space = doubled_space(k.slots());
  const auto pos = aux_positions(k.slots().size(), 0);
  constexpr std::array<int, 2> p12{0, 1};

  ReflectionEquationReport report;
  report.constant_mode =
      mode == ReMode::constant || (mode == ReMode::automatic && k.degree(Var::lambda) == 0);
  PolyMatrix lhs, rhs;
  if (report.constant_mode) {
    if (k.degree(Var::lambda) > 0)
      throw StructuralError("constant mode needs a lambda-independent matrix");
    const PolyMatrix r = embed(lin.r_check, p12, space);
    const PolyMatrix k1 = embed(k, pos, space);
    lhs = r * k1 * r * k1;
    rhs = k1 * r * k1 * r;
  } else {
    const Poly l1 = Poly::variable(Var::lambda1), l2 = Poly::variable(Var::lambda2);
    auto rr = [&](const Poly& u) { return embed(baxterized_check(lin, u), p12, space); };
    const PolyMatrix ka = embed(k.substitute(Var::lambda, l1), pos, space);
    const PolyMatrix kb = embed(k.substitute(Var::lambda, l2), pos, space);
    const PolyMatrix rm = rr(l1 - l2), rp = rr(l1 + l2);
    lhs = rm * ka * rp * kb;
    rhs = kb * rp * ka * rm;
  }
  if (auto diff = first_difference(lhs, rhs)) {
    report.pass = false;
    report.witness = std::move(*diff);
  }
  return report;
}

bool ReflectionAlgebraReport::pass() const {
  for (const auto* list : {&basic, &rela1, &rela2})
    for (const auto& c : *list)
      if (!c.pass) return false;
  return true;
}

ReflectionAlgebraReport check_reflection_algebra(const LinearSolution& lin,
                                                 const SeriesOperator& k) {
  k.validate();
  if (k.depth() < 2) throw Refusal("reflection algebra checks need depth >= 2");
  if (!lin.involutive) throw Refusal("reflection algebra checks need an involutive solution");
  require_aux(lin, k.slots());
  const int depth = k.depth();
  const std::vector<int> space = doubled_space(k.slots());
  const auto pos = aux_positions(k.slots().size(), 0);
  constexpr std::array<int, 2> p12{0, 1};
  const PolyMatrix r = embed(lin.r_check, p12, space);

  // An exact series may be read past its depth; a truncated one may not.
  const int top = k.exact ? depth : depth - 2;
  std::vector<PolyMatrix> kk;
  for (int j = 0; j <= top + 2; ++j) kk.push_back(embed(k.at(j), pos, space));

  ReflectionAlgebraReport report;
  for (int n = 0; n <= top; ++n)
    for (int m = 0; m <= top; ++m) {
      const PolyMatrix lhs = r * kk[n + 2] * r * kk[m] - r * kk[n] * r * kk[m + 2] +
                             r * kk[n + 1] * kk[m] - r * kk[n] * kk[m + 1] +
                             kk[n + 1] * r * kk[m] + kk[n] * r * kk[m + 1] + kk[n] * kk[m];
      const PolyMatrix rhs = kk[m] * r * kk[n + 2] * r - kk[m + 2] * r * kk[n] * r +
                             kk[m] * kk[n + 1] * r - kk[m + 1] * kk[n] * r +
                             kk[m + 1] * r * kk[n] + kk[m] * r * kk[n + 1] + kk[m] * kk[n];
      report.basic.push_back(order_check(n, m, lhs, rhs));
    }

  const PolyMatrix& k0 = kk[0];
  const PolyMatrix& k1 = kk[1];
  const PolyMatrix a0 = r * k0 * r, a1 = r * k1 * r;
  for (int m = 0; m <= depth; ++m) {
    const PolyMatrix& km = kk[m];
    report.rela1.push_back(order_check(-1, m, a0 * km, km * a0));
    const PolyMatrix lhs = a1 * km - km * a1;
    const PolyMatrix rhs = km * k0 * r + km * r * k0 - k0 * r * km - r * k0 * km;
    report.rela2.push_back(order_check(-1, m, lhs, rhs));
  }
  report.k0_scalar = scalar_match(k.at(0)).has_value();
  report.finite_subalgebra =
      report.k0_scalar && report.rela2.size() > 1 && report.rela2[1].pass;
  return report;
}

}  // namespace stybe
