#include "stybe/poly.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "stybe/errors.hpp"

namespace stybe {

namespace {

constexpr std::array<std::string_view, kNumVars> kVarNames = {"l", "l1", "l2", "t",
                                                              "t1", "t2", "m"};

int total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

}  // namespace

std::string_view var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

Var parse_var(std::string_view name) {
  for (int i = 0; i < kNumVars; ++i)
    if (kVarNames[i] == name) return static_cast<Var>(i);
  throw StructuralError("unknown variable '" + std::string(name) + "'");
}

std::string monomial_key(const Exponents& e) {
  std::string key;
  for (int i = 0; i < kNumVars; ++i) {
    if (!e[i]) continue;
    if (!key.empty()) key += '*';
    key += kVarNames[i];
    key += '^';
    key += std::to_string(e[i]);
  }
  return key.empty() ? "1" : key;
}

Exponents parse_monomial_key(std::string_view key) {
  Exponents e{};
  if (key == "1") return e;
  std::size_t pos = 0;
  while (pos <= key.size()) {
    const std::size_t end = std::min(key.find('*', pos), key.size());
    const std::string_view factor = key.substr(pos, end - pos);
    const std::size_t caret = factor.find('^');
    const Var v = parse_var(factor.substr(0, caret));
    int power = 1;
    if (caret != std::string_view::npos) {
      const std::string digits(factor.substr(caret + 1));
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
        throw StructuralError("bad exponent in monomial '" + std::string(key) + "'");
      power = std::stoi(digits);
    }
    if (power > 255) throw StructuralError("exponent too large");
    e[static_cast<int>(v)] = static_cast<std::uint8_t>(e[static_cast<int>(v)] + power);
    pos = end + 1;
  }
  return e;
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  const std::size_t slash = s.find('/');
  auto valid_int = [](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    return i < part.size() &&
           std::all_of(part.begin() + static_cast<long>(i), part.end(), ::isdigit);
  };
  if (!valid_int(s.substr(0, slash)) ||
      (slash != std::string::npos && !valid_int(s.substr(slash + 1))))
    throw StructuralError("bad rational '" + s + "'");
  Rational q;
  if (q.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0 || q.get_den() == 0)
    throw StructuralError("bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rational_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Poly::Poly(long value) {
  if (value != 0) terms_.emplace(Exponents{}, Rational(value));
}

Poly::Poly(const Rational& value) { add_term(Exponents{}, value); }

Poly Poly::variable(Var v, int power) {
  Exponents e{};
  e[static_cast<int>(v)] = static_cast<std::uint8_t>(power);
  return monomial(e, 1);
}

Poly Poly::monomial(const Exponents& e, const Rational& coeff) {
  Poly p;
  p.add_term(e, coeff);
  return p;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

Rational Poly::constant_term() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::degree(Var v) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, int(e[static_cast<int>(v)]));
  return d;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  Rational q = c;
  q.canonicalize();  // callers may hand in an unreduced fraction
  auto [it, inserted] = terms_.try_emplace(e, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (int i = 0; i < kNumVars; ++i) {
        const int s = ea[i] + eb[i];
        if (s > 255) throw std::overflow_error("polynomial exponent overflow");
        e[i] = static_cast<std::uint8_t>(s);
      }
      out.add_term(e, ca * cb);
    }
  return out;
}

Poly pow(const Poly& p, int k) {
  Poly out(1);
  for (int i = 0; i < k; ++i) out *= p;
  return out;
}

Poly Poly::substitute(Var v, const Poly& value) const {
  const int idx = static_cast<int>(v);
  const int deg = degree(v);
  if (deg == 0) return *this;
  std::vector<Poly> powers{Poly(1)};
  for (int k = 1; k <= deg; ++k) powers.push_back(powers.back() * value);
  Poly out;
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[idx] = 0;
    out += Poly::monomial(rest, c) * powers[e[idx]];
  }
  return out;
}

Poly Poly::coefficient(Var v, int k) const {
  const int idx = static_cast<int>(v);
  Poly out;
  for (const auto& [e, c] : terms_)
    if (e[idx] == k) {
      Exponents rest = e;
      rest[idx] = 0;
      out.add_term(rest, c);
    }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const int da = total_degree(a.first), db = total_degree(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [e, c] : ordered) {
    const bool constant = e == Exponents{};
    Rational mag = abs(c);
    if (c < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    std::string factors;
    for (int i = 0; i < kNumVars; ++i) {
      if (!e[i]) continue;
      if (!factors.empty()) factors += '*';
      factors += kVarNames[i];
      if (e[i] > 1) factors += "^" + std::to_string(e[i]);
    }
    if (constant)
      out += mag.get_str();
    else if (mag == 1)
      out += factors;
    else
      out += mag.get_str() + "*" + factors;
  }
  return out;
}

}  // namespace stybe
