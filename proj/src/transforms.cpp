#include "compid/transforms.hpp"

#include "compid/graph.hpp"
#include "compid/random_models.hpp"

#include <algorithm>
#include <stdexcept>

namespace compid {

std::string Edit::to_string() const {
  std::string out = action == Action::Add ? "Add " : "Delete ";
  switch (part) {
    case Part::Input: return out + "input " + std::to_string(compartment);
    case Part::Output: return out + "output " + std::to_string(compartment);
    case Part::Leak: return out + "leak " + std::to_string(compartment);
    case Part::Edge: return out + "edge " + std::to_string(compartment) + "->" + std::to_string(target);
  }
  return out;
}

namespace {

void toggle(std::vector<int>& set, int k, bool add, const char* what) {
  const bool present = std::find(set.begin(), set.end(), k) != set.end();
  if (add && present) throw std::invalid_argument(std::string(what) + " " + std::to_string(k) + " already present");
  if (!add && !present) throw std::invalid_argument(std::string(what) + " " + std::to_string(k) + " not present");
  if (add)
    set.push_back(k);
  else
    set.erase(std::find(set.begin(), set.end(), k));
}

}  // namespace

Model apply_edit(const Model& m, const Edit& e) {
  Model out = m;
  const bool add = e.action == Edit::Action::Add;
  if (e.compartment < 1 || e.compartment > m.n)
    throw std::invalid_argument("compartment " + std::to_string(e.compartment) + " outside the model");
  switch (e.part) {
    case Edit::Part::Input: toggle(out.inputs, e.compartment, add, "input"); break;
    case Edit::Part::Output: toggle(out.outputs, e.compartment, add, "output"); break;
    case Edit::Part::Leak: toggle(out.leaks, e.compartment, add, "leak"); break;
    case Edit::Part::Edge: {
      const Edge edge{e.compartment, e.target};
      const bool present = m.has_edge(edge.from, edge.to);
      const std::string name = "edge " + std::to_string(edge.from) + "->" + std::to_string(edge.to);
      if (add && present) throw std::invalid_argument(name + " already present");
      if (!add && !present) throw std::invalid_argument(name + " not present");
      if (add)
        out.edges.push_back(edge);
      else
        out.edges.erase(std::find(out.edges.begin(), out.edges.end(), edge));
      break;
    }
  }
  try {
    return make_model(out.n, std::move(out.edges), std::move(out.inputs), std::move(out.outputs),
                      std::move(out.leaks));
  } catch (const ModelError& err) {
    throw std::invalid_argument(std::string("edit produces an invalid model: ") + err.what());
  }
}

std::string to_string(Theorem t) {
  switch (t) {
    case Theorem::AddInOut: return "AddInOut";
    case Theorem::AddLeak: return "AddLeak";
    case Theorem::RemoveLeak: return "RemoveLeak";
  }
  return "";
}

bool PreservationReport::theorems_hold() const {
  for (const auto& t : theorems) {
    const bool premise = t.forward ? before.identifiable : after.identifiable;
    const bool conclusion = t.forward ? after.identifiable : before.identifiable;
    if (premise && !conclusion) return false;
  }
  return true;
}

std::optional<Theorem> PreservationReport::theorem_applied() const {
  if (theorems.empty()) return std::nullopt;
  return theorems.front().theorem;
}

namespace {

// Strongly connected, at least one input, no leaks.
bool add_leak_base(const Model& m) {
  return !m.inputs.empty() && m.leaks.empty() && is_strongly_connected(m);
}

// Strongly connected with In = Out = Leak = {k} for a single k.
bool single_site(const Model& m) {
  return m.leaks.size() == 1 && m.inputs == m.leaks && m.outputs == m.leaks && is_strongly_connected(m);
}

}  // namespace

std::vector<AppliedTheorem> applicable_theorems(const Model& m, const Edit& e) {
  const Model after = apply_edit(m, e);
  const bool add = e.action == Edit::Action::Add;
  std::vector<AppliedTheorem> forward;
  std::vector<AppliedTheorem> reverse;
  switch (e.part) {
    case Edit::Part::Input:
    case Edit::Part::Output:
      if (add && !m.inputs.empty()) forward.push_back({Theorem::AddInOut, true});
      if (!add && !after.inputs.empty()) reverse.push_back({Theorem::AddInOut, false});
      break;
    case Edit::Part::Leak:
      if (add) {
        if (add_leak_base(m)) forward.push_back({Theorem::AddLeak, true});
        if (single_site(after)) reverse.push_back({Theorem::RemoveLeak, false});
      } else {
        if (single_site(m)) forward.push_back({Theorem::RemoveLeak, true});
        if (add_leak_base(after)) reverse.push_back({Theorem::AddLeak, false});
      }
      break;
    case Edit::Part::Edge: break;
  }
  forward.insert(forward.end(), reverse.begin(), reverse.end());
  return forward;
}

PreservationReport preservation_report(const Model& m, const Edit& e, const RunOptions& opts) {
  PreservationReport rep;
  rep.edit = e;
  const Model after = apply_edit(m, e);
  rep.theorems = applicable_theorems(m, e);
  rep.before = verdict(m, opts);
  rep.after = verdict(after, opts);
  return rep;
}

LeakProbeResult probe_leak_question(int count, int max_n, const RunOptions& opts) {
  LeakProbeResult res;
  std::mt19937_64 rng(opts.seed);
  RandomModelOptions ro;
  ro.max_n = max_n;
  for (int k = 0; k < count; ++k) {
    const Model m = random_model(rng, ro);
    ++res.models_examined;
    if (verdict(m, opts).identifiable) continue;
    ++res.unidentifiable_models;
    for (int c = 1; c <= m.n; ++c) {
      if (m.has_leak(c)) continue;
      ++res.leak_additions;
      const Model with_leak = apply_edit(m, Edit::add_leak(c));
      if (verdict(with_leak, opts).identifiable) res.counterexamples.push_back({m, c});
    }
  }
  return res;
}

}  // namespace compid
