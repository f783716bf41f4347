#pragma once

#include "compid/graph.hpp"
#include "compid/io_equations.hpp"
#include "compid/model.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace compid {

/// Which coefficient an entry of the coefficient map is.
struct CoefficientTag {
  enum class Side { Lhs, Rhs };
  int output = 0;
  Side side = Side::Lhs;
  int variable = 0;  // i for y_i on the left, j for u_j on the right
  int power = 0;     // derivative order

  /// "y3:u1^(1)" style: equation output, then the term.
  std::string to_string() const;
  friend bool operator==(const CoefficientTag&, const CoefficientTag&) = default;
};

struct CoefficientMap {
  struct Entry {
    CoefficientTag tag;
    Poly value;
  };
  std::vector<Entry> entries;            // non-constant coefficients only
  std::vector<Param> params;             // Jacobian columns
  std::vector<CoefficientTag> dropped;   // rational-constant coefficients
};

/// Coefficients of the given equations, in order: for each equation, the left
/// side below the leading power by descending power, then each input by
/// descending power. Constants (including zero) go to `dropped`.
CoefficientMap coefficient_map_from_equations(const std::vector<IoEquation>& eqs, std::vector<Param> params);

/// Map built from io_equation_reachable for every output.
CoefficientMap coefficient_map(const Model& m);
/// Same for a restriction, over the original parameters it involves.
CoefficientMap coefficient_map(const RestrictedModel& m);

using PolyMatrix = std::vector<std::vector<Poly>>;

PolyMatrix jacobian(const CoefficientMap& c);

struct RankEvidence {
  int rank = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<int> per_trial;
};

/// Maximum over trials of the exact rank of `j` evaluated at independent random
/// integer points in [1, 2^20]. Trial t draws from a generator seeded with
/// (seed, t), so results are deterministic in the seed.
RankEvidence generic_rank(const PolyMatrix& j, std::uint64_t seed, int trials);

/// Exact rank of a rational matrix.
int exact_rank(std::vector<std::vector<Rat>> m);

struct Verdict {
  bool identifiable = false;
  int generic_rank = 0;
  int n_params = 0;
  int coefficient_count = 0;
  RankEvidence evidence;
  std::vector<std::string> dropped;

  std::string label() const;
};

struct RunOptions {
  std::uint64_t seed = 42;
  int trials = 3;
};

/// Generically locally identifiable from the coefficient map iff the generic
/// Jacobian rank equals |E| + |Leak|. A model without outputs has an empty map.
Verdict verdict(const Model& m, const RunOptions& opts = {});
/// Restriction verdict: rank over the original parameters against |E_H| + |Leak_H|.
Verdict verdict(const RestrictedModel& m, const RunOptions& opts = {});

Verdict verdict_from_map(const CoefficientMap& c, int n_params, const RunOptions& opts);

/// True when some compartment outside every output-reachable subgraph leaks or
/// has an outgoing edge, which forces unidentifiability. False (inconclusive)
/// when the model has no input.
bool quick_unidentifiable(const Model& m);

struct ObservableRestrictionReport {
  std::vector<int> component;
  Verdict model;
  Verdict restriction;
  bool maps_equal = false;
  /// model identifiable implies restriction identifiable.
  bool implication_holds() const { return !model.identifiable || restriction.identifiable; }
};

/// Throws std::invalid_argument when the model has no input.
ObservableRestrictionReport observable_restriction_check(const Model& m, const RunOptions& opts = {});

}  // namespace compid
