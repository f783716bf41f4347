#pragma once

#include "compid/poly.hpp"

#include <string>
#include <vector>

namespace compid {

/// Univariate polynomial in lambda with Poly coefficients. Lambda stands for
/// the operator d/dt; the matrices involved are constant in t, so it is
/// treated as an ordinary commuting indeterminate.
class LambdaPoly {
 public:
  LambdaPoly() = default;
  explicit LambdaPoly(std::vector<Poly> coeffs);
  LambdaPoly(const Poly& c) : LambdaPoly(std::vector<Poly>{c}) {}  // NOLINT(google-explicit-constructor)
  static LambdaPoly lambda();

  /// Index = power of lambda; the last entry is nonzero unless empty.
  const std::vector<Poly>& coeffs() const { return coeffs_; }
  /// Coefficient of lambda^k (zero beyond the degree).
  Poly coeff(std::size_t k) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Poly& leading() const { return coeffs_.back(); }
  bool is_monic() const;
  bool is_one() const;

  LambdaPoly& operator+=(const LambdaPoly& o);
  LambdaPoly& operator-=(const LambdaPoly& o);
  friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
  friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
  friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b);
  LambdaPoly operator-() const;
  friend bool operator==(const LambdaPoly&, const LambdaPoly&) = default;

  /// Terms in descending powers with lambda printed as "s", e.g.
  /// "s^2+(a_1_2+a_2_1)*s".
  std::string to_string() const;

 private:
  std::vector<Poly> coeffs_;
};

/// Exact quotient f / g in (Q[params])[lambda]; nullopt if g does not divide f.
std::optional<LambdaPoly> divide_exact(const LambdaPoly& f, const LambdaPoly& g);

/// True iff f divides g exactly. Throws std::invalid_argument when f is zero.
bool lambda_divides(const LambdaPoly& f, const LambdaPoly& g);

/// GCD of nonzero lambda-polynomials. With a monic entry: a specialization
/// test for gcd 1, then subresultant sequences; otherwise primitive
/// pseudo-remainder sequences. The result has content 1, its leading coefficient is an
/// integer-primitive polynomial with positive leading rational, and a result
/// of lambda-degree 0 is reported as 1. Throws on an empty list or a zero
/// entry.
LambdaPoly lambda_gcd(const std::vector<LambdaPoly>& fs);

/// lambda_gcd of {product of factors} and others, taken one factor at a time.
LambdaPoly lambda_gcd_factored(const std::vector<LambdaPoly>& factors, std::vector<LambdaPoly> others);

/// Square matrix of LambdaPolys whose rows and columns are tagged with
/// compartment labels (a restriction keeps its original labels).
class LambdaMatrix {
 public:
  LambdaMatrix() = default;
  LambdaMatrix(std::vector<int> labels, std::vector<std::vector<LambdaPoly>> entries);

  std::size_t size() const { return labels_.size(); }
  const std::vector<int>& labels() const { return labels_; }
  const LambdaPoly& at(std::size_t r, std::size_t c) const { return entries_[r][c]; }
  const std::vector<std::vector<LambdaPoly>>& entries() const { return entries_; }

  /// Position of a label; throws std::out_of_range when absent.
  std::size_t position(int label) const;

 private:
  std::vector<int> labels_;
  std::vector<std::vector<LambdaPoly>> entries_;
};

/// Determinant by fraction-free (Bareiss) elimination. The 0x0 determinant is 1.
LambdaPoly determinant(const LambdaMatrix& m);

/// Determinant of m with the row labeled row_label and the column labeled
/// col_label deleted.
LambdaPoly minor_det(const LambdaMatrix& m, int row_label, int col_label);

}  // namespace compid
