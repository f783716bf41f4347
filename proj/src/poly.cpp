#include "compid/poly.hpp"

#include "upoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace compid {

std::string Param::name() const {
  return "a_" + std::to_string(target) + "_" + std::to_string(source);
}

unsigned total_degree(const Monomial& m) {
  unsigned d = 0;
  for (const auto& [p, e] : m) d += e;
  return d;
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
  if (auto c = total_degree(a) <=> total_degree(b); c != 0) return c;
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (ia->first != ib->first) {
      // The monomial carrying the earlier variable is larger.
      return ia->first < ib->first ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (auto c = ia->second <=> ib->second; c != 0) return c;
  }
  if (ia != a.end()) return std::strong_ordering::greater;
  if (ib != b.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

namespace {

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first == ib->first) {
      out.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    } else if (ia->first < ib->first) {
      out.push_back(*ia++);
    } else {
      out.push_back(*ib++);
    }
  }
  out.insert(out.end(), ia, a.end());
  out.insert(out.end(), ib, b.end());
  return out;
}

// a / b when every exponent of b is at most the one in a.
std::optional<Monomial> divide(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto ia = a.begin();
  for (const auto& [p, e] : b) {
    while (ia != a.end() && ia->first < p) out.push_back(*ia++);
    if (ia == a.end() || ia->first != p || ia->second < e) return std::nullopt;
    if (ia->second > e) out.emplace_back(p, ia->second - e);
    ++ia;
  }
  out.insert(out.end(), ia, a.end());
  return out;
}

std::string rat_string(const Rat& r) {
  return r.get_str();
}

}  // namespace

Poly::Poly(const Rat& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Poly Poly::var(Param p) {
  Poly out;
  out.terms_.emplace(Monomial{{p, 1u}}, Rat(1));
  return out;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat Poly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rat(0) : it->second;
}

unsigned Poly::degree_in(Param p) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_)
    for (const auto& [q, e] : m)
      if (q == p) d = std::max(d, e);
  return d;
}

std::set<Param> Poly::variables() const {
  std::set<Param> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [q, e] : m) out.insert(q);
  return out;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(multiply(ma, mb), ca * cb);
  return out;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly Poly::derivative(Param p) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k].first != p) continue;
      Monomial d = m;
      const unsigned e = d[k].second;
      if (e == 1)
        d.erase(d.begin() + static_cast<std::ptrdiff_t>(k));
      else
        d[k].second = e - 1;
      out.add_term(d, c * e);
    }
  }
  return out;
}

Rat Poly::evaluate(const Point& point) const {
  Rat total = 0;
  for (const auto& [m, c] : terms_) {
    Rat term = c;
    for (const auto& [p, e] : m) {
      auto it = point.find(p);
      if (it == point.end()) throw std::invalid_argument("no value assigned to " + p.name());
      mpq_class power;
      mpz_pow_ui(power.get_num_mpz_t(), it->second.get_num_mpz_t(), e);
      mpz_pow_ui(power.get_den_mpz_t(), it->second.get_den_mpz_t(), e);
      term *= power;
    }
    total += term;
  }
  return total;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat mag = abs(c);
    if (c < 0)
      os << "-";
    else if (!first)
      os << "+";
    first = false;
    bool need_star = false;
    if (m.empty() || mag != 1) {
      os << rat_string(mag);
      need_star = true;
    }
    for (const auto& [p, e] : m) {
      if (need_star) os << "*";
      os << p.name();
      if (e > 1) os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

std::optional<Poly> divide_exact(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  const auto& [lm, lc] = g.leading();
  Poly rem = f;
  Poly quot;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading();
    auto q = divide(rm, lm);
    if (!q) return std::nullopt;
    Rat qc = rc / lc;
    Poly step;
    step.add_term(*q, qc);
    quot.add_term(*q, qc);
    rem -= step * g;
  }
  return quot;
}

Poly integer_primitive(const Poly& f) {
  if (f.is_zero()) return f;
  mpz_class den = 1;
  mpz_class num = 0;
  for (const auto& [m, c] : f.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  Rat scale(den, num);
  scale.canonicalize();
  if (f.leading().second < 0) scale = -scale;
  return f * scale;
}

std::vector<Poly> coefficients_in(const Poly& f, Param p) {
  std::vector<Poly> out(f.degree_in(p) + 1);
  for (const auto& [m, c] : f.terms()) {
    Monomial rest;
    unsigned e = 0;
    for (const auto& term : m) {
      if (term.first == p)
        e = term.second;
      else
        rest.push_back(term);
    }
    out[e].add_term(rest, c);
  }
  if (f.is_zero()) out.clear();
  return out;
}

namespace {

Poly from_coefficients(const std::vector<Poly>& coeffs, Param p) {
  Poly out;
  Poly power(1);
  const Poly x = Poly::var(p);
  for (const auto& c : coeffs) {
    out += c * power;
    power *= x;
  }
  return out;
}

}  // namespace

Poly gcd(const Poly& f, const Poly& g) {
  if (f.is_zero()) return integer_primitive(g);
  if (g.is_zero()) return integer_primitive(f);
  if (f.is_constant() || g.is_constant()) return Poly(1);

  auto vars = f.variables();
  vars.merge(g.variables());
  const Param v = *vars.begin();

  auto fc = coefficients_in(f, v);
  auto gc = coefficients_in(g, v);
  if (fc.size() == 1) return gcd(f, detail::content(gc));
  if (gc.size() == 1) return gcd(detail::content(fc), g);

  Poly c = gcd(detail::content(fc), detail::content(gc));
  auto h = detail::primitive_gcd(detail::primitive_part(fc), detail::primitive_part(gc));
  return integer_primitive(c * from_coefficients(h, v));
}

namespace detail {

void trim(UPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int degree(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  trim(out);
  return out;
}

UPoly scale(const UPoly& a, const Poly& c) {
  UPoly out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(x * c);
  trim(out);
  return out;
}

UPoly pseudo_remainder(UPoly a, const UPoly& b) {
  if (b.empty()) throw std::invalid_argument("pseudo-remainder by zero");
  const int db = degree(b);
  const Poly& lb = b.back();
  while (!a.empty() && degree(a) >= db) {
    const int shift = degree(a) - db;
    const Poly la = a.back();
    for (auto& x : a) x *= lb;
    for (int k = 0; k <= db; ++k) a[static_cast<std::size_t>(k + shift)] -= la * b[static_cast<std::size_t>(k)];
    trim(a);
  }
  return a;
}

Poly content(const UPoly& a) {
  Poly c;
  for (const auto& x : a) {
    c = gcd(c, x);
    if (c.is_constant() && !c.is_zero()) return Poly(1);
  }
  return c;
}

UPoly primitive_part(const UPoly& a) {
  if (a.empty()) return a;
  Poly c = content(a);
  // Keep the leading coefficient's grlex-leading rational positive.
  if (a.back().leading().second < 0) c = -c;
  UPoly out;
  out.reserve(a.size());
  for (const auto& x : a) {
    auto q = compid::divide_exact(x, c);
    if (!q) throw std::logic_error("content does not divide coefficient");
    out.push_back(std::move(*q));
  }
  return out;
}

UPoly primitive_gcd(UPoly a, UPoly b) {
  a = primitive_part(a);
  b = primitive_part(b);
  if (degree(a) < degree(b)) std::swap(a, b);
  while (!b.empty()) {
    UPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return primitive_part(a);
}

std::optional<UPoly> divide_exact(const UPoly& a, const UPoly& b) {
  if (b.empty()) throw std::invalid_argument("division by the zero polynomial");
  if (a.empty()) return UPoly{};
  if (degree(a) < degree(b)) return std::nullopt;
  UPoly rem = a;
  UPoly quot(static_cast<std::size_t>(degree(a) - degree(b) + 1));
  const int db = degree(b);
  while (!rem.empty() && degree(rem) >= db) {
    const int shift = degree(rem) - db;
    auto q = compid::divide_exact(rem.back(), b.back());
    if (!q) return std::nullopt;
    for (int k = 0; k <= db; ++k) rem[static_cast<std::size_t>(k + shift)] -= *q * b[static_cast<std::size_t>(k)];
    // The top coefficient cancels exactly; drop it even if trim would not.
    rem.pop_back();
    trim(rem);
    quot[static_cast<std::size_t>(shift)] = std::move(*q);
  }
  if (!rem.empty()) return std::nullopt;
  trim(quot);
  return quot;
}

}  // namespace detail
}  // namespace compid
