#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace compid {

/// Exact rationals. Always canonical (positive denominator, reduced) after
/// arithmetic through mpq_class.
using Rat = mpq_class;

/// A model parameter: either the rate a_{ij} of the edge j -> i, or the leak
/// rate a_{0i} of compartment i.
///
/// Canonical order: all edge parameters first, sorted by (i, j), then all
/// leak parameters sorted by i.
struct Param {
  int target = 0;  // i in a_{ij}; 0 for a leak
  int source = 0;  // j in a_{ij}; the leaking compartment for a leak

  static Param edge(int from, int to) { return Param{to, from}; }
  static Param leak(int compartment) { return Param{0, compartment}; }

  bool is_leak() const { return target == 0; }

  /// "a_<i>_<j>" or "a_0_<i>".
  std::string name() const;

  friend bool operator==(const Param&, const Param&) = default;
  friend std::strong_ordering operator<=>(const Param& a, const Param& b) {
    if (a.is_leak() != b.is_leak()) return a.is_leak() ? std::strong_ordering::greater : std::strong_ordering::less;
    if (auto c = a.target <=> b.target; c != 0) return c;
    return a.source <=> b.source;
  }
};

/// Sparse exponent vector, sorted by Param, exponents strictly positive.
using Monomial = std::vector<std::pair<Param, unsigned>>;

unsigned total_degree(const Monomial& m);

/// Graded lexicographic comparison; the earliest Param in canonical order is
/// the most significant variable.
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

/// Point assignment used by Poly::evaluate.
using Point = std::map<Param, Rat>;

/// Multivariate polynomial over Q in Params.  Terms are kept in descending
/// graded-lex order; zero coefficients are never stored.
class Poly {
 public:
  using Terms = std::map<Monomial, Rat, GrlexGreater>;

  Poly() = default;
  Poly(const Rat& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  static Poly var(Param p);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of the constant term (zero if absent).
  Rat constant_term() const;
  std::size_t size() const { return terms_.size(); }

  /// Leading term in grlex order. Requires !is_zero().
  const std::pair<const Monomial, Rat>& leading() const { return *terms_.begin(); }

  unsigned degree_in(Param p) const;
  std::set<Param> variables() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly derivative(Param p) const;

  /// Throws std::invalid_argument if a variable of the polynomial has no value.
  Rat evaluate(const Point& point) const;

  /// "+"/"-" separated terms, leading term first, e.g. "a_1_2*a_2_1-2*a_3_2+1/2".
  std::string to_string() const;

  /// Adds c * m in place.
  void add_term(const Monomial& m, const Rat& c);

 private:
  Terms terms_;
};

/// Quotient when g divides f exactly in Q[params]; nullopt otherwise.
/// Requires g nonzero.
std::optional<Poly> divide_exact(const Poly& f, const Poly& g);

/// Scales f by a nonzero rational so its coefficients are coprime integers and
/// the leading coefficient is positive. Zero maps to zero.
Poly integer_primitive(const Poly& f);

/// Greatest common divisor in Q[params], normalized by integer_primitive.
/// gcd(0, 0) = 0; a nonzero constant gcd is 1.
Poly gcd(const Poly& f, const Poly& g);

/// Coefficient list of f viewed as a polynomial in p (index = power of p).
std::vector<Poly> coefficients_in(const Poly& f, Param p);

}  // namespace compid
