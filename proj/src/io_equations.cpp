#include "compid/io_equations.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace compid {

namespace {

void append_side(std::ostringstream& os, const std::string& var, const LambdaPoly& p, bool& first) {
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    const Poly& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    const std::string symbol = var + "^(" + std::to_string(k) + ")";
    bool negative = false;
    std::string body = c.to_string();
    if (c.size() == 1 && c.leading().second < 0) {
      negative = true;
      body = (-c).to_string();
    }
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (body == "1")
      os << symbol;
    else if (c.size() > 1)
      os << "(" << body << ")*" << symbol;
    else
      os << body << "*" << symbol;
  }
}

}  // namespace

std::string IoEquation::to_string() const {
  std::ostringstream os;
  bool first = true;
  append_side(os, "y" + std::to_string(output), lhs, first);
  os << " = ";
  first = true;
  for (const auto& [j, p] : rhs) append_side(os, "u" + std::to_string(j), p, first);
  if (first) os << "0";
  return os.str();
}

IoEquation io_equation_from_matrix(const CompartmentalMatrix& a, const std::vector<int>& inputs, int output,
                                   IoEquation::Source source) {
  const LambdaMatrix m = char_matrix(a);
  IoEquation eq;
  eq.output = output;
  eq.source = source;
  eq.vertices = a.labels();
  eq.lhs = determinant(m);
  const std::size_t pi = m.position(output);
  for (int j : inputs) {
    if (std::find(a.labels().begin(), a.labels().end(), j) == a.labels().end()) continue;
    const std::size_t pj = m.position(j);
    LambdaPoly minor = minor_det(m, j, output);
    if (minor.is_zero()) continue;
    if ((pi + pj) % 2 == 1) minor = -minor;
    eq.rhs.emplace(j, std::move(minor));
  }
  return eq;
}

namespace {

void require_output(const std::vector<int>& outputs, int i) {
  if (!std::binary_search(outputs.begin(), outputs.end(), i))
    throw std::invalid_argument("compartment " + std::to_string(i) + " is not an output");
}

}  // namespace

IoEquation io_equation_full(const Model& m, int i) {
  require_output(m.outputs, i);
  return io_equation_from_matrix(compartmental_matrix(m), m.inputs, i, IoEquation::Source::Full);
}

IoEquation io_equation_full(const RestrictedModel& m, int i) {
  require_output(m.outputs, i);
  return io_equation_from_matrix(m.matrix(), m.inputs, i, IoEquation::Source::Full);
}

IoEquation io_equation_reachable(const Model& m, int i) {
  require_output(m.outputs, i);
  const auto h = ancestors(Digraph::of(m), i);
  return io_equation_from_matrix(compartmental_matrix(m).principal(h), m.inputs, i, IoEquation::Source::Reachable);
}

IoEquation io_equation_reachable(const RestrictedModel& m, int i) {
  require_output(m.outputs, i);
  const auto h = ancestors(m.graph(), i);
  return io_equation_from_matrix(m.matrix().principal(h), m.inputs, i, IoEquation::Source::Reachable);
}

LambdaPoly io_gcd(const Model& m, int i) {
  const IoEquation eq = io_equation_full(m, i);
  std::vector<LambdaPoly> minors;
  for (const auto& [j, p] : eq.rhs) minors.push_back(p);
  // det(lambda I - A) is the product of its strong-component blocks.
  const CompartmentalMatrix a = compartmental_matrix(m);
  std::vector<LambdaPoly> blocks;
  for (const auto& c : strong_components(m)) blocks.push_back(determinant(char_matrix(a.principal(c.vertices))));
  return lambda_gcd_factored(blocks, std::move(minors));
}

GcdCertificate gcd_factor_certificate(const Model& m, int i) {
  auto hbar = input_output_reachable(m, i);
  if (!hbar) throw std::invalid_argument("no input reaches output " + std::to_string(i));
  GcdCertificate cert;
  cert.output = i;
  cert.reachable = hbar->vertices;
  for (int v = 1; v <= m.n; ++v)
    if (!hbar->contains(v)) cert.complement.push_back(v);
  cert.divisor = determinant(char_matrix(compartmental_matrix(m).principal(cert.complement)));
  cert.gcd = io_gcd(m, i);
  cert.divides = lambda_divides(cert.divisor, cert.gcd);
  cert.gcd_is_one = cert.gcd.is_one();
  cert.reachable_is_everything = cert.complement.empty();
  return cert;
}

}  // namespace compid
