#pragma once

#include "compid/model.hpp"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace compid {

/// Induced subgraph, identified by its sorted vertex set.
struct Subgraph {
  std::vector<int> vertices;

  bool contains(int v) const;
  friend bool operator==(const Subgraph&, const Subgraph&) = default;
};

/// Plain directed graph on labeled vertices.
struct Digraph {
  std::vector<int> vertices;  // sorted
  std::vector<Edge> edges;    // sorted

  static Digraph of(const Model& m);
};

/// Strong components, each sorted, ordered by smallest member.
std::vector<Subgraph> strong_components(const Digraph& g);
std::vector<Subgraph> strong_components(const Model& m);
bool is_strongly_connected(const Model& m);

/// Vertices with a directed path to v (v included), sorted.
std::vector<int> ancestors(const Digraph& g, int v);
/// Vertices reachable from any of the sources (sources included), sorted.
std::vector<int> descendants(const Digraph& g, std::span<const int> sources);

/// Induced subgraph on every j with a path j ~> i. Throws std::invalid_argument
/// if i is not an output.
Subgraph output_reachable(const Model& m, int i);

/// Compartments on some directed path from an input to output i; nullopt when
/// no input reaches i.
std::optional<Subgraph> input_output_reachable(const Model& m, int i);

/// Union of the output-reachable subgraphs of all outputs.
Subgraph observable_component(const Model& m);

/// Every compartment reaches an output.
bool output_connectable(const Model& m);
/// Every compartment is reachable from an input.
bool input_connectable(const Model& m);

/// Upstream / input-output-reachable / downstream split for output i, used to
/// put lambda*I - A in block lower-triangular form.
struct BlockPartition {
  std::vector<int> upstream;
  std::vector<int> reachable;
  std::vector<int> downstream;
};
/// Requires some input to reach output i (throws std::invalid_argument).
BlockPartition block_partition(const Model& m, int i);

/// Restriction of a model to an induced subgraph H: incoming edges to H are
/// dropped, outgoing edges from H become leaks, and leak labels are sums of
/// the original parameters.
struct RestrictedModel {
  std::vector<int> vertices;
  std::vector<Edge> edges;  // edges with both ends in H
  std::vector<int> inputs;
  std::vector<int> outputs;
  std::map<int, Poly> leak_labels;

  Digraph graph() const;
  CompartmentalMatrix matrix() const;
  /// |E_H| + |Leak_H|.
  std::size_t parameter_count() const { return edges.size() + leak_labels.size(); }
};

/// Throws std::invalid_argument when H contains no output or a vertex outside
/// the model.
RestrictedModel restrict_to(const Model& m, const Subgraph& h);

/// All spanning trees with every edge directed toward root, by brute-force
/// enumeration of one outgoing edge per non-root vertex. Edges of each tree
/// are sorted; trees are in lexicographic order.
std::vector<std::vector<Edge>> incoming_spanning_trees(const Model& m, int root);

/// Sum over trees of the product of their edge parameters.
Poly tree_polynomial(const std::vector<std::vector<Edge>>& trees);

/// For a model whose only leak is at compartment 1 and whose graph is strongly
/// connected: whether the lambda^0 coefficient of det(lambda*I - A) equals
/// a_{01} times the incoming-tree polynomial rooted at 1. Throws
/// std::invalid_argument when those hypotheses fail.
bool leak_coefficient_check(const Model& m);

}  // namespace compid
