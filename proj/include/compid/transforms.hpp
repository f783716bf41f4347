#pragma once

#include "compid/identifiability.hpp"
#include "compid/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace compid {

struct Edit {
  enum class Action { Add, Delete };
  enum class Part { Input, Output, Leak, Edge };

  Action action = Action::Add;
  Part part = Part::Input;
  int compartment = 0;  // for Edge: the source compartment
  int target = 0;       // for Edge only

  static Edit add_input(int k) { return {Action::Add, Part::Input, k, 0}; }
  static Edit delete_input(int k) { return {Action::Delete, Part::Input, k, 0}; }
  static Edit add_output(int k) { return {Action::Add, Part::Output, k, 0}; }
  static Edit delete_output(int k) { return {Action::Delete, Part::Output, k, 0}; }
  static Edit add_leak(int k) { return {Action::Add, Part::Leak, k, 0}; }
  static Edit delete_leak(int k) { return {Action::Delete, Part::Leak, k, 0}; }
  static Edit add_edge(int from, int to) { return {Action::Add, Part::Edge, from, to}; }
  static Edit delete_edge(int from, int to) { return {Action::Delete, Part::Edge, from, to}; }

  /// Row label in the style of the add/delete tables, e.g. "Add leak 1".
  std::string to_string() const;
};

/// Throws std::invalid_argument for an inapplicable edit (adding something
/// present, deleting something absent, bad index). Deleting the last output
/// is allowed; such a model has an empty coefficient map.
Model apply_edit(const Model& m, const Edit& e);

enum class Theorem { AddInOut, AddLeak, RemoveLeak };
std::string to_string(Theorem t);

/// A theorem whose hypotheses hold for this edit. Forward: identifiability of
/// the model before the edit implies it after. Reverse (contrapositive use of a
/// theorem on the inverse edit): identifiability after implies before.
struct AppliedTheorem {
  Theorem theorem;
  bool forward = true;
};

struct PreservationReport {
  Edit edit;
  Verdict before;
  Verdict after;
  std::vector<AppliedTheorem> theorems;

  /// Identifiability status unchanged by the edit.
  bool preserved() const { return before.identifiable == after.identifiable; }
  /// Every applicable theorem's implication holds for the computed verdicts.
  bool theorems_hold() const;
  std::optional<Theorem> theorem_applied() const;
};

/// Theorems whose hypotheses hold for applying e to m.
std::vector<AppliedTheorem> applicable_theorems(const Model& m, const Edit& e);

PreservationReport preservation_report(const Model& m, const Edit& e, const RunOptions& opts = {});

struct LeakProbeResult {
  int models_examined = 0;
  int unidentifiable_models = 0;
  int leak_additions = 0;
  struct Counterexample {
    Model model;
    int leak = 0;
  };
  std::vector<Counterexample> counterexamples;
};

/// Searches random unidentifiable models (at least one input, up to max_n
/// compartments) for a single added leak that makes them identifiable.
LeakProbeResult probe_leak_question(int count, int max_n, const RunOptions& opts = {});

}  // namespace compid
