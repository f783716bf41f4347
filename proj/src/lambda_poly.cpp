#include "compid/lambda_poly.hpp"

#include "upoly.hpp"

#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace compid {

LambdaPoly::LambdaPoly(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) {
  detail::trim(coeffs_);
}

LambdaPoly LambdaPoly::lambda() { return LambdaPoly(std::vector<Poly>{Poly(), Poly(1)}); }

Poly LambdaPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Poly(); }

bool LambdaPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == Poly(1); }

bool LambdaPoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == Poly(1); }

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  detail::trim(coeffs_);
  return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  detail::trim(coeffs_);
  return *this;
}

LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
  return LambdaPoly(detail::mul(a.coeffs_, b.coeffs_));
}

LambdaPoly LambdaPoly::operator-() const {
  LambdaPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string LambdaPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Poly& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string body = c.to_string();
    bool negative = false;
    if (c.size() == 1 && c.leading().second < 0) {
      negative = true;
      body = (-c).to_string();
    }
    if (negative)
      os << "-";
    else if (!first)
      os << "+";
    first = false;
    const std::string power = k == 0 ? "" : (k == 1 ? "s" : "s^" + std::to_string(k));
    if (k == 0) {
      os << body;
    } else if (body == "1") {
      os << power;
    } else if (c.size() > 1) {
      os << "(" << body << ")*" << power;
    } else {
      os << body << "*" << power;
    }
  }
  return os.str();
}

std::optional<LambdaPoly> divide_exact(const LambdaPoly& f, const LambdaPoly& g) {
  auto q = detail::divide_exact(f.coeffs(), g.coeffs());
  if (!q) return std::nullopt;
  return LambdaPoly(std::move(*q));
}

bool lambda_divides(const LambdaPoly& f, const LambdaPoly& g) {
  if (f.is_zero()) throw std::invalid_argument("lambda_divides: divisor is zero");
  return divide_exact(g, f).has_value();
}

namespace {

// Scale by a rational so all coefficients are coprime integers and the leading
// rational of the leading lambda-coefficient is positive.
detail::UPoly normalize_rational(detail::UPoly a) {
  mpz_class den = 1;
  mpz_class num = 0;
  for (const auto& p : a)
    for (const auto& [m, c] : p.terms()) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    }
  Rat scale(den, num);
  scale.canonicalize();
  if (a.back().leading().second < 0) scale = -scale;
  for (auto& p : a) p *= scale;
  return a;
}

}  // namespace

namespace {

Poly power(const Poly& p, int e) {
  Poly out(1);
  for (int k = 0; k < e; ++k) out *= p;
  return out;
}

detail::UPoly divide_coefficients(const detail::UPoly& a, const Poly& d) {
  detail::UPoly out;
  out.reserve(a.size());
  for (const auto& x : a) {
    auto q = divide_exact(x, d);
    if (!q) throw std::logic_error("subresultant step is not exact");
    out.push_back(std::move(*q));
  }
  return out;
}

// lc(b)^(deg a - deg b + 1) * a mod b, with the full power even when a step
// cancels more than one degree.
detail::UPoly full_pseudo_remainder(const detail::UPoly& a, const detail::UPoly& b) {
  const int db = detail::degree(b);
  const Poly& lb = b.back();
  detail::UPoly r = a;
  int steps = 0;
  while (!r.empty() && detail::degree(r) >= db) {
    const int shift = detail::degree(r) - db;
    const Poly lr = r.back();
    for (auto& x : r) x *= lb;
    for (int k = 0; k <= db; ++k) r[static_cast<std::size_t>(k + shift)] -= lr * b[static_cast<std::size_t>(k)];
    detail::trim(r);
    ++steps;
  }
  const int missing = detail::degree(a) - db + 1 - steps;
  if (missing > 0 && !r.empty()) r = detail::scale(r, power(lb, missing));
  return r;
}

// Last nonzero term of the subresultant PRS: a Q[params]-multiple of gcd(a, b).
detail::UPoly subresultant_gcd(detail::UPoly a, detail::UPoly b) {
  if (detail::degree(a) < detail::degree(b)) std::swap(a, b);
  Poly g(1);
  Poly h(1);
  while (true) {
    if (detail::degree(b) == 0) return b;
    const int delta = detail::degree(a) - detail::degree(b);
    detail::UPoly r = full_pseudo_remainder(a, b);
    if (r.empty()) return b;
    a = std::move(b);
    b = divide_coefficients(r, g * power(h, delta));
    g = a.back();
    if (delta > 0) {
      auto q = divide_exact(power(g, delta), power(h, delta - 1));
      if (!q) throw std::logic_error("subresultant step is not exact");
      h = std::move(*q);
    }
  }
}

detail::UPoly specialize(const detail::UPoly& a, const Point& pt) {
  detail::UPoly out;
  for (const auto& c : a) out.emplace_back(c.evaluate(pt));
  detail::trim(out);
  return out;
}

// gcd when some entry has a rational-constant leading coefficient. The gcd
// divides that entry, so it can be taken monic with polynomial coefficients.
LambdaPoly monic_gcd(const std::vector<LambdaPoly>& fs, std::size_t monic_at) {
  // Degree 0 at any specialization that keeps the monic entry's degree proves
  // the gcd is 1.
  std::set<Param> vars;
  for (const auto& f : fs)
    for (const auto& c : f.coeffs()) vars.merge(c.variables());
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<long> dist(1, 1L << 20);
  Point pt;
  for (const auto& v : vars) pt[v] = Rat(dist(rng));
  detail::UPoly sg = specialize(fs[monic_at].coeffs(), pt);
  for (const auto& f : fs) {
    const detail::UPoly sf = specialize(f.coeffs(), pt);
    if (sf.empty()) continue;
    sg = subresultant_gcd(sg, sf);
    if (detail::degree(sg) == 0) return LambdaPoly(Poly(1));
  }

  detail::UPoly g = divide_coefficients(fs[monic_at].coeffs(), fs[monic_at].leading());
  for (std::size_t k = 0; k < fs.size(); ++k) {
    if (k == monic_at || divide_exact(fs[k], LambdaPoly(g))) continue;
    const detail::UPoly last = subresultant_gcd(g, fs[k].coeffs());
    if (detail::degree(last) == 0) return LambdaPoly(Poly(1));
    g = divide_coefficients(last, last.back());
  }
  return LambdaPoly(normalize_rational(std::move(g)));
}

}  // namespace

LambdaPoly lambda_gcd(const std::vector<LambdaPoly>& fs) {
  if (fs.empty()) throw std::invalid_argument("lambda_gcd: empty list");
  for (const auto& f : fs)
    if (f.is_zero()) throw std::invalid_argument("lambda_gcd: zero polynomial in list");
  for (std::size_t k = 0; k < fs.size(); ++k)
    if (fs[k].leading().is_constant()) return monic_gcd(fs, k);
  detail::UPoly g;
  for (const auto& f : fs) {
    g = g.empty() ? detail::primitive_part(f.coeffs()) : detail::primitive_gcd(g, f.coeffs());
    if (detail::degree(g) == 0) return LambdaPoly(Poly(1));
  }
  return LambdaPoly(normalize_rational(detail::primitive_part(g)));
}

// gcd(ab, c) = gcd(a, c) * gcd(b, c / gcd(a, c)).
LambdaPoly lambda_gcd_factored(const std::vector<LambdaPoly>& factors, std::vector<LambdaPoly> others) {
  if (factors.empty()) throw std::invalid_argument("lambda_gcd_factored: no factors");
  LambdaPoly g(Poly(1));
  for (const auto& f : factors) {
    std::vector<LambdaPoly> list{f};
    list.insert(list.end(), others.begin(), others.end());
    const LambdaPoly gk = lambda_gcd(list);
    if (gk.is_one()) continue;
    g = g * gk;
    for (auto& o : others) o = *divide_exact(o, gk);
  }
  return lambda_gcd({g});
}

LambdaMatrix::LambdaMatrix(std::vector<int> labels, std::vector<std::vector<LambdaPoly>> entries)
    : labels_(std::move(labels)), entries_(std::move(entries)) {
  if (entries_.size() != labels_.size()) throw std::invalid_argument("LambdaMatrix: label count mismatch");
  for (const auto& row : entries_)
    if (row.size() != labels_.size()) throw std::invalid_argument("LambdaMatrix: not square");
}

std::size_t LambdaMatrix::position(int label) const {
  for (std::size_t k = 0; k < labels_.size(); ++k)
    if (labels_[k] == label) return k;
  throw std::out_of_range("label " + std::to_string(label) + " not in matrix");
}

namespace {

using Grid = std::vector<std::vector<detail::UPoly>>;

detail::UPoly bareiss(Grid m) {
  const std::size_t n = m.size();
  if (n == 0) return {Poly(1)};
  bool negate = false;
  detail::UPoly prev{Poly(1)};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].empty()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].empty()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        detail::UPoly num = detail::mul(m[k][k], m[i][j]);
        if (!m[i][k].empty() && !m[k][j].empty()) {
          detail::UPoly cross = detail::mul(m[i][k], m[k][j]);
          if (num.size() < cross.size()) num.resize(cross.size());
          for (std::size_t t = 0; t < cross.size(); ++t) num[t] -= cross[t];
          detail::trim(num);
        }
        auto q = detail::divide_exact(num, prev);
        if (!q) throw std::logic_error("Bareiss step is not an exact division");
        m[i][j] = std::move(*q);
      }
      m[i][k].clear();
    }
    prev = m[k][k];
  }
  detail::UPoly out = std::move(m[n - 1][n - 1]);
  if (negate)
    for (auto& c : out) c = -c;
  return out;
}

}  // namespace

LambdaPoly determinant(const LambdaMatrix& m) {
  Grid g(m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) g[r].push_back(m.at(r, c).coeffs());
  return LambdaPoly(bareiss(std::move(g)));
}

LambdaPoly minor_det(const LambdaMatrix& m, int row_label, int col_label) {
  const std::size_t skip_r = m.position(row_label);
  const std::size_t skip_c = m.position(col_label);
  Grid g;
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (r == skip_r) continue;
    auto& row = g.emplace_back();
    for (std::size_t c = 0; c < m.size(); ++c)
      if (c != skip_c) row.push_back(m.at(r, c).coeffs());
  }
  return LambdaPoly(bareiss(std::move(g)));
}

}  // namespace compid
