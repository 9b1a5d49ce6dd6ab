#include "stybe/poly_matrix.hpp"

#include <functional>
#include <numeric>
#include <string>

#include "stybe/errors.hpp"

namespace stybe {

namespace {

int product(const std::vector<int>& slots) {
  long d = 1;
  for (int s : slots) {
    if (s < 1) throw StructuralError("tensor factor dimension must be positive");
    d *= s;
    if (d > (1 << 24)) throw StructuralError("tensor space too large");
  }
  return static_cast<int>(d);
}

void require_same_shape(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.dim() != b.dim())
    throw StructuralError("matrix dimensions differ: " + std::to_string(a.dim()) +
                          " vs " + std::to_string(b.dim()));
}

// Mixed-radix digits of index i over the factor dimensions.
std::vector<int> digits(int i, const std::vector<int>& slots) {
  std::vector<int> d(slots.size());
  for (int k = static_cast<int>(slots.size()) - 1; k >= 0; --k) {
    d[k] = i % slots[k];
    i /= slots[k];
  }
  return d;
}

int index_of(const std::vector<int>& d, const std::vector<int>& slots) {
  int i = 0;
  for (std::size_t k = 0; k < slots.size(); ++k) i = i * slots[k] + d[k];
  return i;
}

}  // namespace

PolyMatrix::PolyMatrix(std::vector<int> slots)
    : dim_(product(slots)), slots_(std::move(slots)), rows_(dim_) {}

PolyMatrix PolyMatrix::identity(std::vector<int> slots) {
  PolyMatrix m(std::move(slots));
  for (int i = 0; i < m.dim_; ++i) m.rows_[i].emplace(i, Poly(1));
  return m;
}

PolyMatrix PolyMatrix::unit(int n, int row, int col) {
  if (row < 0 || row >= n || col < 0 || col >= n)
    throw StructuralError("unit matrix index out of range");
  PolyMatrix m({n});
  m.rows_[row].emplace(col, Poly(1));
  return m;
}

Poly PolyMatrix::at(int r, int c) const {
  const auto it = rows_.at(r).find(c);
  return it == rows_[r].end() ? Poly() : it->second;
}

void PolyMatrix::set(int r, int c, Poly value) {
  if (r < 0 || r >= dim_ || c < 0 || c >= dim_)
    throw StructuralError("matrix index out of range");
  if (value.is_zero())
    rows_[r].erase(c);
  else
    rows_[r][c] = std::move(value);
}

void PolyMatrix::add_to(int r, int c, const Poly& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = rows_.at(r).try_emplace(c, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) rows_[r].erase(it);
  }
}

std::size_t PolyMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

bool PolyMatrix::is_zero() const {
  for (const auto& row : rows_)
    if (!row.empty()) return false;
  return true;
}

bool PolyMatrix::is_constant() const {
  for (const auto& row : rows_)
    for (const auto& [c, p] : row)
      if (!p.is_constant()) return false;
  return true;
}

int PolyMatrix::degree(Var v) const {
  int d = 0;
  for (const auto& row : rows_)
    for (const auto& [c, p] : row) d = std::max(d, p.degree(v));
  return d;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& other) {
  require_same_shape(*this, other);
  for (int r = 0; r < dim_; ++r)
    for (const auto& [c, p] : other.rows_[r]) add_to(r, c, p);
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& other) {
  require_same_shape(*this, other);
  for (int r = 0; r < dim_; ++r)
    for (const auto& [c, p] : other.rows_[r]) add_to(r, c, -p);
  return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_shape(a, b);
  PolyMatrix out(a.slots_);
  for (int i = 0; i < a.dim_; ++i) {
    auto& row = out.rows_[i];
    for (const auto& [k, aik] : a.rows_[i])
      for (const auto& [j, bkj] : b.rows_[k]) {
        auto [it, inserted] = row.try_emplace(j, aik * bkj);
        if (!inserted) it->second += aik * bkj;
      }
    std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
  }
  return out;
}

PolyMatrix operator*(const Poly& s, const PolyMatrix& a) {
  PolyMatrix out(a.slots_);
  if (s.is_zero()) return out;
  for (int r = 0; r < a.dim_; ++r)
    for (const auto& [c, p] : a.rows_[r]) out.rows_[r].emplace(c, s * p);
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix out(slots_);
  for (int r = 0; r < dim_; ++r)
    for (const auto& [c, p] : rows_[r]) out.rows_[c].emplace(r, p);
  return out;
}

PolyMatrix PolyMatrix::substitute(Var v, const Poly& value) const {
  PolyMatrix out(slots_);
  for (int r = 0; r < dim_; ++r)
    for (const auto& [c, p] : rows_[r]) out.set(r, c, p.substitute(v, value));
  return out;
}

PolyMatrix PolyMatrix::coefficient(Var v, int k) const {
  PolyMatrix out(slots_);
  for (int r = 0; r < dim_; ++r)
    for (const auto& [c, p] : rows_[r]) out.set(r, c, p.coefficient(v, k));
  return out;
}

PolyMatrix PolyMatrix::with_slots(std::vector<int> slots) const {
  if (product(slots) != dim_)
    throw StructuralError("slot structure does not match dimension " + std::to_string(dim_));
  PolyMatrix out = *this;
  out.slots_ = std::move(slots);
  return out;
}

bool PolyMatrix::operator==(const PolyMatrix& other) const {
  return dim_ == other.dim_ && rows_ == other.rows_;
}

PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b) {
  std::vector<int> slots = a.slots();
  slots.insert(slots.end(), b.slots().begin(), b.slots().end());
  PolyMatrix out(slots);
  const int db = b.dim();
  for (int ra = 0; ra < a.dim(); ++ra)
    for (const auto& [ca, pa] : a.rows()[ra])
      for (int rb = 0; rb < db; ++rb)
        for (const auto& [cb, pb] : b.rows()[rb])
          out.set(ra * db + rb, ca * db + cb, pa * pb);
  return out;
}

PolyMatrix permutation_matrix(int n) {
  if (n < 1) throw StructuralError("permutation operator needs N >= 1");
  PolyMatrix p({n, n});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) p.set(x * n + y, y * n + x, 1);
  return p;
}

PolyMatrix partial_transpose(const PolyMatrix& a, int slot) {
  const auto& slots = a.slots();
  if (slot < 0 || slot >= static_cast<int>(slots.size()))
    throw StructuralError("partial transpose: slot " + std::to_string(slot) +
                          " out of range");
  PolyMatrix out(slots);
  for (int r = 0; r < a.dim(); ++r)
    for (const auto& [c, p] : a.rows()[r]) {
      auto dr = digits(r, slots), dc = digits(c, slots);
      std::swap(dr[slot], dc[slot]);
      out.set(index_of(dr, slots), index_of(dc, slots), p);
    }
  return out;
}

std::optional<Poly> scalar_match(const PolyMatrix& a) {
  if (a.dim() == 0) return std::nullopt;
  const Poly c = a.at(0, 0);
  for (int r = 0; r < a.dim(); ++r) {
    const auto& row = a.rows()[r];
    if (c.is_zero()) {
      if (!row.empty()) return std::nullopt;
      continue;
    }
    if (row.size() != 1 || row.begin()->first != r || row.begin()->second != c)
      return std::nullopt;
  }
  return c;
}

PolyMatrix embed(const PolyMatrix& op, std::span<const int> positions,
                 const std::vector<int>& space) {
  const auto& op_slots = op.slots();
  if (positions.size() != op_slots.size())
    throw StructuralError("embed: operator has " + std::to_string(op_slots.size()) +
                          " factors but " + std::to_string(positions.size()) +
                          " positions were given");
  std::vector<char> used(space.size(), 0);
  for (std::size_t k = 0; k < positions.size(); ++k) {
    const int p = positions[k];
    if (p < 0 || p >= static_cast<int>(space.size()) || used[p])
      throw StructuralError("embed: bad position " + std::to_string(p));
    if (space[p] != op_slots[k])
      throw StructuralError("embed: factor dimension mismatch at position " +
                            std::to_string(p));
    used[p] = 1;
  }
  std::vector<int> rest;
  for (std::size_t p = 0; p < space.size(); ++p)
    if (!used[p]) rest.push_back(static_cast<int>(p));

  PolyMatrix out(space);
  std::vector<int> rest_dims;
  for (int p : rest) rest_dims.push_back(space[p]);
  const int rest_dim = rest.empty() ? 1 : product(rest_dims);
  std::vector<int> dr(space.size()), dc(space.size());
  for (int r = 0; r < op.dim(); ++r)
    for (const auto& [c, val] : op.rows()[r]) {
      const auto opr = digits(r, op_slots), opc = digits(c, op_slots);
      for (std::size_t k = 0; k < positions.size(); ++k) {
        dr[positions[k]] = opr[k];
        dc[positions[k]] = opc[k];
      }
      for (int e = 0; e < rest_dim; ++e) {
        const auto de = rest.empty() ? std::vector<int>{} : digits(e, rest_dims);
        for (std::size_t k = 0; k < rest.size(); ++k) dr[rest[k]] = dc[rest[k]] = de[k];
        out.set(index_of(dr, space), index_of(dc, space), val);
      }
    }
  return out;
}

PolyMatrix slot_permutation(const std::vector<int>& space, std::span<const int> perm) {
  const std::size_t d = space.size();
  if (perm.size() != d) throw StructuralError("slot permutation has wrong length");
  std::vector<int> target(d, -1);
  for (std::size_t k = 0; k < d; ++k) {
    if (perm[k] < 0 || perm[k] >= static_cast<int>(d) || target[perm[k]] >= 0)
      throw StructuralError("slot permutation is not a permutation");
    target[perm[k]] = space[k];
  }
  PolyMatrix out(target);
  for (int i = 0; i < out.dim(); ++i) {
    const auto src = digits(i, space);
    std::vector<int> dst(d);
    for (std::size_t k = 0; k < d; ++k) dst[perm[k]] = src[k];
    out.set(index_of(dst, target), i, 1);
  }
  return out;
}

std::optional<PolyMatrix> inverse(const PolyMatrix& a) {
  if (!a.is_constant()) throw StructuralError("inverse needs a constant matrix");
  const int n = a.dim();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (int r = 0; r < n; ++r) {
    for (const auto& [c, p] : a.rows()[r]) m[r][c] = p.constant_term();
    m[r][n + r] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    const Rational inv = 1 / m[col][col];
    for (auto& v : m[col]) v *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (int c = col; c < 2 * n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  PolyMatrix out(a.slots());
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (m[r][n + c] != 0) out.set(r, c, Poly(m[r][n + c]));
  return out;
}

std::optional<EntryDiff> first_difference(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_shape(a, b);
  for (int r = 0; r < a.dim(); ++r) {
    const auto& ra = a.rows()[r];
    const auto& rb = b.rows()[r];
    if (ra == rb) continue;
    auto ia = ra.begin();
    auto ib = rb.begin();
    while (ia != ra.end() || ib != rb.end()) {
      const int ca = ia == ra.end() ? a.dim() : ia->first;
      const int cb = ib == rb.end() ? a.dim() : ib->first;
      const int c = std::min(ca, cb);
      const Poly pa = ca == c ? ia->second : Poly();
      const Poly pb = cb == c ? ib->second : Poly();
      if (pa != pb) return EntryDiff{r, c, pa, pb};
      if (ca == c) ++ia;
      if (cb == c) ++ib;
    }
  }
  return std::nullopt;
}

}  // namespace stybe
