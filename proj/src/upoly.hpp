#pragma once

// Dense univariate polynomials with Poly coefficients. Shared by the
// recursive multivariate gcd and by LambdaPoly.

#include "compid/poly.hpp"

#include <vector>

namespace compid::detail {

using UPoly = std::vector<Poly>;  // index = power

void trim(UPoly& a);
int degree(const UPoly& a);  // -1 for the zero polynomial

UPoly mul(const UPoly& a, const UPoly& b);
UPoly scale(const UPoly& a, const Poly& c);

/// lc(b)^(deg a - deg b + 1) * a mod b, computed without coefficient division.
UPoly pseudo_remainder(UPoly a, const UPoly& b);

/// gcd of the coefficients. Zero for the zero polynomial.
Poly content(const UPoly& a);

/// a / content(a); the zero polynomial stays zero.
UPoly primitive_part(const UPoly& a);

/// Primitive gcd (content discarded) by the primitive pseudo-remainder sequence.
/// Both arguments nonzero.
UPoly primitive_gcd(UPoly a, UPoly b);

/// Exact quotient a / b when b divides a in R[x]; nullopt otherwise.
std::optional<UPoly> divide_exact(const UPoly& a, const UPoly& b);

}  // namespace compid::detail
