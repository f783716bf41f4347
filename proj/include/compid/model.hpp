#pragma once

#include "compid/lambda_poly.hpp"
#include "compid/poly.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace compid {

/// Directed edge j -> i, stored as (from, to).  Its parameter is a_{to,from}.
struct Edge {
  int from = 0;
  int to = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
  Param param() const { return Param::edge(from, to); }
};

class ModelError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Schema, IndexOutOfRange, SelfLoop, Duplicate, EmptyOutputs };

  ModelError(Kind kind, std::string where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what), kind_(kind), where_(std::move(where)) {}

  Kind kind() const { return kind_; }
  /// Byte offset or JSON pointer locating the problem.
  const std::string& where() const { return where_; }

 private:
  Kind kind_;
  std::string where_;
};

/// Linear compartmental model: a directed graph on compartments 1..n plus the
/// input, output and leak sets.  All lists are kept sorted and duplicate-free.
struct Model {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<int> inputs;
  std::vector<int> outputs;
  std::vector<int> leaks;

  friend bool operator==(const Model&, const Model&) = default;

  bool has_edge(int from, int to) const;
  bool has_input(int k) const;
  bool has_output(int k) const;
  bool has_leak(int k) const;
};

/// Sorts every list and checks the structural invariants: indices in 1..n, no
/// self-loops, no duplicates. An empty output set passes here; parse_model
/// rejects it separately.
Model make_model(int n, std::vector<Edge> edges, std::vector<int> inputs, std::vector<int> outputs,
                 std::vector<int> leaks);

/// Parses the JSON model format. Throws ModelError.
Model parse_model(std::string_view text);

/// Canonical single-line JSON (arrays sorted ascending).
std::string serialize_model(const Model& m);

/// |E| edge parameters in canonical order, then |Leak| leak parameters.
std::vector<Param> parameter_list(const Model& m);

enum class Family { Catenary, Cycle, Mammillary };

Family parse_family(std::string_view name);

/// Catenary, cycle and mammillary models with In = Out = {1} and no leaks.
/// Throws std::invalid_argument below the family minimum (2, 3, 2).
Model generate_family(Family kind, int n);

/// Compartmental matrix with compartment labels on rows and columns.
class CompartmentalMatrix {
 public:
  CompartmentalMatrix() = default;
  CompartmentalMatrix(std::vector<int> labels, std::vector<std::vector<Poly>> entries);

  std::size_t size() const { return labels_.size(); }
  const std::vector<int>& labels() const { return labels_; }
  const Poly& at(std::size_t r, std::size_t c) const { return entries_[r][c]; }
  /// Entry addressed by compartment labels.
  const Poly& entry(int row_label, int col_label) const;

  /// Principal submatrix on the given labels (kept in ascending order).
  CompartmentalMatrix principal(const std::vector<int>& labels) const;

  friend bool operator==(const CompartmentalMatrix&, const CompartmentalMatrix&) = default;

 private:
  std::vector<int> labels_;
  std::vector<std::vector<Poly>> entries_;
};

CompartmentalMatrix compartmental_matrix(const Model& m);

/// lambda*I - A, labels preserved.
LambdaMatrix char_matrix(const CompartmentalMatrix& a);

}  // namespace compid
