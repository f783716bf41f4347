#include "compid/identifiability.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace compid {

std::string CoefficientTag::to_string() const {
  const char var = side == Side::Lhs ? 'y' : 'u';
  return "y" + std::to_string(output) + ":" + var + std::to_string(variable) + "^(" + std::to_string(power) + ")";
}

CoefficientMap coefficient_map_from_equations(const std::vector<IoEquation>& eqs, std::vector<Param> params) {
  CoefficientMap c;
  c.params = std::move(params);
  auto take = [&c](CoefficientTag tag, const Poly& p) {
    if (p.is_constant())
      c.dropped.push_back(tag);
    else
      c.entries.push_back({tag, p});
  };
  for (const auto& eq : eqs) {
    for (int d = eq.lhs.degree() - 1; d >= 0; --d)
      take({eq.output, CoefficientTag::Side::Lhs, eq.output, d}, eq.lhs.coeff(static_cast<std::size_t>(d)));
    for (const auto& [j, p] : eq.rhs)
      for (int d = p.degree(); d >= 0; --d)
        take({eq.output, CoefficientTag::Side::Rhs, j, d}, p.coeff(static_cast<std::size_t>(d)));
  }
  return c;
}

CoefficientMap coefficient_map(const Model& m) {
  std::vector<IoEquation> eqs;
  for (int i : m.outputs) eqs.push_back(io_equation_reachable(m, i));
  return coefficient_map_from_equations(eqs, parameter_list(m));
}

CoefficientMap coefficient_map(const RestrictedModel& m) {
  std::vector<IoEquation> eqs;
  for (int i : m.outputs) eqs.push_back(io_equation_reachable(m, i));
  std::set<Param> vars;
  for (const auto& e : m.edges) vars.insert(e.param());
  for (const auto& [k, label] : m.leak_labels) vars.merge(label.variables());
  return coefficient_map_from_equations(eqs, {vars.begin(), vars.end()});
}

PolyMatrix jacobian(const CoefficientMap& c) {
  PolyMatrix j;
  for (const auto& e : c.entries) {
    auto& row = j.emplace_back();
    for (const auto& p : c.params) row.push_back(e.value.derivative(p));
  }
  return j;
}

int exact_rank(std::vector<std::vector<Rat>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const Rat f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return static_cast<int>(r);
}

RankEvidence generic_rank(const PolyMatrix& j, std::uint64_t seed, int trials) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  std::set<Param> vars;
  for (const auto& row : j)
    for (const auto& p : row) vars.merge(p.variables());

  RankEvidence ev;
  ev.seed = seed;
  ev.trials = trials;
  for (int t = 0; t < trials; ++t) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(t)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<long> dist(1, 1L << 20);
    Point point;
    for (const auto& v : vars) point[v] = Rat(dist(rng));
    std::vector<std::vector<Rat>> numeric;
    for (const auto& row : j) {
      auto& out = numeric.emplace_back();
      for (const auto& p : row) out.push_back(p.evaluate(point));
    }
    const int r = exact_rank(std::move(numeric));
    ev.per_trial.push_back(r);
    ev.rank = std::max(ev.rank, r);
  }
  return ev;
}

std::string Verdict::label() const {
  return identifiable ? "generically locally identifiable from the coefficient map"
                      : "unidentifiable from the coefficient map";
}

Verdict verdict_from_map(const CoefficientMap& c, int n_params, const RunOptions& opts) {
  Verdict v;
  v.n_params = n_params;
  v.coefficient_count = static_cast<int>(c.entries.size());
  v.evidence = generic_rank(jacobian(c), opts.seed, opts.trials);
  v.generic_rank = v.evidence.rank;
  v.identifiable = v.generic_rank == n_params;
  for (const auto& t : c.dropped) v.dropped.push_back(t.to_string());
  return v;
}

Verdict verdict(const Model& m, const RunOptions& opts) {
  const CoefficientMap c = coefficient_map(m);
  return verdict_from_map(c, static_cast<int>(c.params.size()), opts);
}

Verdict verdict(const RestrictedModel& m, const RunOptions& opts) {
  return verdict_from_map(coefficient_map(m), static_cast<int>(m.parameter_count()), opts);
}

bool quick_unidentifiable(const Model& m) {
  if (m.inputs.empty() || m.outputs.empty()) return false;
  const Subgraph obs = observable_component(m);
  for (int j = 1; j <= m.n; ++j) {
    if (obs.contains(j)) continue;
    if (m.has_leak(j)) return true;
    for (const auto& e : m.edges)
      if (e.from == j) return true;
  }
  return false;
}

ObservableRestrictionReport observable_restriction_check(const Model& m, const RunOptions& opts) {
  if (m.inputs.empty()) throw std::invalid_argument("observable restriction check needs at least one input");
  ObservableRestrictionReport rep;
  const Subgraph h = observable_component(m);
  rep.component = h.vertices;
  const RestrictedModel r = restrict_to(m, h);
  const CoefficientMap cm = coefficient_map(m);
  const CoefficientMap cr = coefficient_map(r);
  rep.model = verdict_from_map(cm, static_cast<int>(cm.params.size()), opts);
  rep.restriction = verdict_from_map(cr, static_cast<int>(r.parameter_count()), opts);
  rep.maps_equal = cm.entries.size() == cr.entries.size() &&
                   std::equal(cm.entries.begin(), cm.entries.end(), cr.entries.begin(),
                              [](const auto& a, const auto& b) { return a.tag == b.tag && a.value == b.value; });
  return rep;
}

}  // namespace compid
