#pragma once

#include "compid/graph.hpp"
#include "compid/lambda_poly.hpp"
#include "compid/model.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace compid {

/// lhs(d/dt) y_i = sum_j rhs_j(d/dt) u_j.
struct IoEquation {
  enum class Source { Full, Reachable };

  int output = 0;
  LambdaPoly lhs;
  std::map<int, LambdaPoly> rhs;  // zero entries omitted
  Source source = Source::Full;
  std::vector<int> vertices;  // compartments of the matrix the equation came from

  /// "y1^(2) + (a_1_2+a_3_2)*y1^(1) + ... = u1^(1) + ...".
  std::string to_string() const;

  friend bool operator==(const IoEquation&, const IoEquation&) = default;
};

/// Equation of output i read off a (possibly restricted) compartmental matrix
/// by Cramer's rule: lhs = det(lambda*I - A), rhs_j = (-1)^(pos(i)+pos(j)) times
/// the minor with row j and column i removed, positions counted within the
/// matrix's sorted labels. Inputs outside the matrix are ignored.
IoEquation io_equation_from_matrix(const CompartmentalMatrix& a, const std::vector<int>& inputs, int output,
                                   IoEquation::Source source);

/// Equation from the full compartmental matrix. Throws std::invalid_argument if
/// i is not an output.
IoEquation io_equation_full(const Model& m, int i);
IoEquation io_equation_full(const RestrictedModel& m, int i);

/// Equation from the restriction to the output-reachable subgraph of i.
IoEquation io_equation_reachable(const Model& m, int i);
IoEquation io_equation_reachable(const RestrictedModel& m, int i);

/// GCD of det(lambda*I - A) and the nonzero input minors, on the full matrix.
LambdaPoly io_gcd(const Model& m, int i);

struct GcdCertificate {
  int output = 0;
  std::vector<int> reachable;   // input-output-reachable vertices
  std::vector<int> complement;  // all other vertices
  LambdaPoly divisor;           // det(lambda*I - A) on the complement
  LambdaPoly gcd;
  bool divides = false;          // divisor | gcd
  bool gcd_is_one = false;
  bool reachable_is_everything = false;
  /// gcd == 1 implies the reachable set is every compartment.
  bool corollary_holds() const { return !gcd_is_one || reachable_is_everything; }
};

/// Throws std::invalid_argument when no input reaches i.
GcdCertificate gcd_factor_certificate(const Model& m, int i);

}  // namespace compid
