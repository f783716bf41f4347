#include "cli.hpp"

#include "compid/graph.hpp"
#include "compid/identifiability.hpp"
#include "compid/io_equations.hpp"
#include "compid/model.hpp"
#include "compid/transforms.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

namespace compid::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kDefinitionNote =
    "decided by the Jacobian rank of the coefficient map of the output-reachable input-output equations; "
    "agreement with the characteristic-set definition is conjectured but unproved";

/// Error carrying the exit code to report.
class Failure : public std::runtime_error {
 public:
  Failure(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

struct Globals {
  std::uint64_t seed = 42;
  int trials = 3;
  std::string format = "text";

  RunOptions options() const { return {seed, trials}; }
  bool as_json() const { return format == "json"; }
};

Model load_model(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Failure(kUsage, "cannot read model file '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  try {
    return parse_model(text);
  } catch (const ModelError& e) {
    if (e.kind() == ModelError::Kind::EmptyOutputs)
      throw Failure(kPrecondition, std::string("precondition violated: Out must be nonempty (") + e.what() + ")");
    throw Failure(kUsage, std::string("invalid model: ") + e.what());
  }
}

std::string join(const std::vector<int>& xs, const char* sep = " ") {
  std::ostringstream os;
  for (std::size_t k = 0; k < xs.size(); ++k) os << (k ? sep : "") << xs[k];
  return os.str();
}

std::string join(const std::vector<std::string>& xs, const char* sep = " ") {
  std::ostringstream os;
  for (std::size_t k = 0; k < xs.size(); ++k) os << (k ? sep : "") << xs[k];
  return os.str();
}

std::string set_text(const std::vector<int>& xs) { return "{" + join(xs, ",") + "}"; }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<std::string> param_names(const std::vector<Param>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.name());
  return out;
}

json terms_json(const std::string& var, const LambdaPoly& p) {
  json arr = json::array();
  for (int k = p.degree(); k >= 0; --k) {
    const Poly c = p.coeff(static_cast<std::size_t>(k));
    if (c.is_zero()) continue;
    arr.push_back({{"variable", var}, {"order", k}, {"coefficient", c.to_string()}});
  }
  return arr;
}

json equation_json(const IoEquation& eq) {
  json rhs = json::array();
  for (const auto& [j, p] : eq.rhs)
    for (auto& t : terms_json("u" + std::to_string(j), p)) rhs.push_back(t);
  return {{"output", eq.output},
          {"source", eq.source == IoEquation::Source::Full ? "full" : "reachable"},
          {"vertices", eq.vertices},
          {"lhs", terms_json("y" + std::to_string(eq.output), eq.lhs)},
          {"rhs", rhs},
          {"text", eq.to_string()}};
}

void equation_text(std::ostream& out, const IoEquation& eq) {
  out << "  [y" << eq.output << "] "
      << (eq.source == IoEquation::Source::Full ? "full matrix on " : "output-reachable subgraph ")
      << set_text(eq.vertices) << "\n    " << eq.to_string() << "\n";
}

json verdict_json(const Verdict& v, const Globals& g) {
  return {{"verdict", v.label()},
          {"generic_rank", v.generic_rank},
          {"n_params", v.n_params},
          {"seed", g.seed},
          {"trials", g.trials},
          {"dropped_constant_coefficients", v.dropped},
          {"coefficient_count", v.coefficient_count},
          {"identifiable", v.identifiable},
          {"per_trial_ranks", v.evidence.per_trial},
          {"note", kDefinitionNote}};
}

void verdict_text(std::ostream& out, const Verdict& v, const Globals& g, const std::string& indent = "") {
  out << indent << "coefficient_count: " << v.coefficient_count << "\n"
      << indent << "dropped_constant_coefficients: " << (v.dropped.empty() ? "none" : join(v.dropped)) << "\n"
      << indent << "n_params: " << v.n_params << "\n"
      << indent << "generic_rank: " << v.generic_rank << "\n"
      << indent << "per_trial_ranks: " << join(v.evidence.per_trial) << "\n"
      << indent << "seed: " << g.seed << "\n"
      << indent << "trials: " << g.trials << "\n"
      << indent << "verdict: " << v.label() << "\n"
      << indent << "note: " << kDefinitionNote << "\n";
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// ---- subcommands ---------------------------------------------------------

int cmd_analyze(const Model& m, const Globals& g, std::ostream& out) {
  std::vector<IoEquation> eqs;
  for (int i : m.outputs) eqs.push_back(io_equation_reachable(m, i));
  const Verdict v = verdict(m, g.options());
  const bool quick = quick_unidentifiable(m);
  if (g.as_json()) {
    json j = verdict_json(v, g);
    j["model"] = json::parse(serialize_model(m));
    j["parameters"] = param_names(parameter_list(m));
    json arr = json::array();
    for (const auto& eq : eqs) arr.push_back(equation_json(eq));
    j["equations"] = arr;
    j["output_connectable"] = output_connectable(m);
    j["input_connectable"] = input_connectable(m);
    j["quick_unidentifiable"] = quick;
    emit(out, j);
    return kOk;
  }
  out << "model: " << serialize_model(m) << "\n"
      << "parameters: " << join(param_names(parameter_list(m))) << "\n"
      << "output_connectable: " << yes_no(output_connectable(m)) << "\n"
      << "input_connectable: " << yes_no(input_connectable(m)) << "\n"
      << "quick_unidentifiable: " << yes_no(quick) << "\n"
      << "equations:\n";
  for (const auto& eq : eqs) equation_text(out, eq);
  verdict_text(out, v, g);
  return kOk;
}

int cmd_io_eq(const Model& m, std::optional<int> output, bool full, const Globals& g, std::ostream& out) {
  std::vector<int> outs = output ? std::vector<int>{*output} : m.outputs;
  std::vector<IoEquation> eqs;
  for (int i : outs) eqs.push_back(full ? io_equation_full(m, i) : io_equation_reachable(m, i));
  if (g.as_json()) {
    json arr = json::array();
    for (const auto& eq : eqs) arr.push_back(equation_json(eq));
    emit(out, {{"equations", arr}});
    return kOk;
  }
  for (const auto& eq : eqs) equation_text(out, eq);
  return kOk;
}

int cmd_gcd(const Model& m, int output, bool certificate, const Globals& g, std::ostream& out, std::ostream& err) {
  if (!certificate) {
    const LambdaPoly d = io_gcd(m, output);
    if (g.as_json())
      emit(out, {{"output", output}, {"gcd", d.to_string()}, {"gcd_is_one", d.is_one()}});
    else
      out << "gcd(y" << output << "): " << d.to_string() << "\n";
    return kOk;
  }
  const GcdCertificate c = gcd_factor_certificate(m, output);
  if (g.as_json()) {
    emit(out, {{"output", output},
               {"reachable", c.reachable},
               {"complement", c.complement},
               {"divisor", c.divisor.to_string()},
               {"gcd", c.gcd.to_string()},
               {"divides", c.divides},
               {"gcd_is_one", c.gcd_is_one},
               {"reachable_is_everything", c.reachable_is_everything},
               {"corollary_holds", c.corollary_holds()}});
  } else {
    out << "output: y" << output << "\n"
        << "input-output reachable: " << set_text(c.reachable) << "\n"
        << "complement: " << set_text(c.complement) << "\n"
        << "complement determinant: " << c.divisor.to_string() << "\n"
        << "gcd: " << c.gcd.to_string() << "\n"
        << "divides gcd: " << yes_no(c.divides) << "\n"
        << "gcd is one: " << yes_no(c.gcd_is_one) << "\n"
        << "reachable is everything: " << yes_no(c.reachable_is_everything) << "\n";
  }
  if (!c.divides || !c.corollary_holds()) {
    err << "internal error: gcd certificate failed\n";
    return kInternal;
  }
  return kOk;
}

int cmd_reach(const Model& m, int output, bool with_inputs, const Globals& g, std::ostream& out) {
  const Subgraph h = output_reachable(m, output);
  json j{{"output", output}, {"output_reachable", h.vertices}};
  std::optional<BlockPartition> bp;
  if (with_inputs) {
    if (!input_output_reachable(m, output))
      throw Failure(kPrecondition, "no input reaches output " + std::to_string(output));
    bp = block_partition(m, output);
    j["input_output_reachable"] = bp->reachable;
    j["upstream"] = bp->upstream;
    j["downstream"] = bp->downstream;
  }
  if (g.as_json()) {
    emit(out, j);
    return kOk;
  }
  out << "output-reachable to y" << output << ": " << set_text(h.vertices) << "\n";
  if (bp)
    out << "input-output-reachable: " << set_text(bp->reachable) << "\n"
        << "upstream: " << set_text(bp->upstream) << "\n"
        << "downstream: " << set_text(bp->downstream) << "\n";
  return kOk;
}

json restriction_json(const RestrictedModel& r) {
  json edges = json::array();
  for (const auto& e : r.edges) edges.push_back({e.from, e.to});
  json leaks = json::object();
  for (const auto& [k, label] : r.leak_labels) leaks[std::to_string(k)] = label.to_string();
  return {{"vertices", r.vertices}, {"edges", edges}, {"inputs", r.inputs}, {"outputs", r.outputs},
          {"leak_labels", leaks}};
}

void restriction_text(std::ostream& out, const RestrictedModel& r) {
  out << "vertices: " << set_text(r.vertices) << "\nedges:";
  for (const auto& e : r.edges) out << " " << e.from << "->" << e.to;
  out << "\ninputs: " << set_text(r.inputs) << "\noutputs: " << set_text(r.outputs) << "\nleaks:";
  for (const auto& [k, label] : r.leak_labels) out << " " << k << ":" << label.to_string();
  out << "\n";
}

int cmd_restrict(const Model& m, const std::vector<int>& vertices, const Globals& g, std::ostream& out) {
  const RestrictedModel r = restrict_to(m, Subgraph{vertices});
  std::vector<IoEquation> eqs;
  for (int i : r.outputs) eqs.push_back(io_equation_reachable(r, i));
  const Verdict v = verdict(r, g.options());
  if (g.as_json()) {
    json j = verdict_json(v, g);
    j["restriction"] = restriction_json(r);
    json arr = json::array();
    for (const auto& eq : eqs) arr.push_back(equation_json(eq));
    j["equations"] = arr;
    emit(out, j);
    return kOk;
  }
  restriction_text(out, r);
  out << "equations:\n";
  for (const auto& eq : eqs) equation_text(out, eq);
  verdict_text(out, v, g);
  return kOk;
}

int cmd_observable(const Model& m, const Globals& g, std::ostream& out, std::ostream& err) {
  const ObservableRestrictionReport rep = observable_restriction_check(m, g.options());
  if (g.as_json()) {
    emit(out, {{"component", rep.component},
               {"maps_equal", rep.maps_equal},
               {"implication_holds", rep.implication_holds()},
               {"model", verdict_json(rep.model, g)},
               {"restriction", verdict_json(rep.restriction, g)}});
  } else {
    out << "observable component: " << set_text(rep.component) << "\n"
        << "coefficient maps equal: " << yes_no(rep.maps_equal) << "\n"
        << "implication holds: " << yes_no(rep.implication_holds()) << "\n"
        << "model:\n";
    verdict_text(out, rep.model, g, "  ");
    out << "restriction:\n";
    verdict_text(out, rep.restriction, g, "  ");
  }
  if (!rep.implication_holds()) {
    err << "internal error: identifiable model with unidentifiable observable component\n";
    return kInternal;
  }
  return kOk;
}

int cmd_edit(const Model& m, const Edit& e, bool compare, const Globals& g, std::ostream& out, std::ostream& err) {
  if (!compare) {
    const Model after = apply_edit(m, e);
    if (g.as_json())
      emit(out, json::parse(serialize_model(after)));
    else
      out << serialize_model(after) << "\n";
    return kOk;
  }
  const PreservationReport rep = preservation_report(m, e, g.options());
  const auto applied = rep.theorem_applied();
  if (g.as_json()) {
    json th = json::array();
    for (const auto& t : rep.theorems)
      th.push_back({{"theorem", to_string(t.theorem)}, {"direction", t.forward ? "forward" : "reverse"}});
    emit(out, {{"edit", e.to_string()},
               {"before", verdict_json(rep.before, g)},
               {"after", verdict_json(rep.after, g)},
               {"theorem_applied", applied ? json(to_string(*applied)) : json(nullptr)},
               {"theorems", th},
               {"preserved", rep.preserved()},
               {"theorems_hold", rep.theorems_hold()}});
  } else {
    out << "edit: " << e.to_string() << "\n"
        << "before: " << (rep.before.identifiable ? "identifiable" : "unidentifiable") << " (rank "
        << rep.before.generic_rank << " of " << rep.before.n_params << ")\n"
        << "after: " << (rep.after.identifiable ? "identifiable" : "unidentifiable") << " (rank "
        << rep.after.generic_rank << " of " << rep.after.n_params << ")\n"
        << "theorem_applied: " << (applied ? to_string(*applied) : "none") << "\n"
        << "theorems:";
    if (rep.theorems.empty()) out << " none";
    for (const auto& t : rep.theorems) out << " " << to_string(t.theorem) << (t.forward ? "(forward)" : "(reverse)");
    out << "\npreserved: " << yes_no(rep.preserved()) << "\n"
        << "theorems_hold: " << yes_no(rep.theorems_hold()) << "\n"
        << "seed: " << g.seed << "\ntrials: " << g.trials << "\n";
  }
  if (!rep.theorems_hold()) {
    err << "internal error: computed verdicts contradict an applicable theorem\n";
    return kInternal;
  }
  return kOk;
}

int cmd_probe(int count, int max_n, const Globals& g, std::ostream& out) {
  const LeakProbeResult res = probe_leak_question(count, max_n, g.options());
  if (g.as_json()) {
    json ce = json::array();
    for (const auto& c : res.counterexamples)
      ce.push_back({{"model", json::parse(serialize_model(c.model))}, {"leak", c.leak}});
    emit(out, {{"models_examined", res.models_examined},
               {"unidentifiable_models", res.unidentifiable_models},
               {"leak_additions", res.leak_additions},
               {"counterexamples", ce},
               {"seed", g.seed},
               {"trials", g.trials},
               {"note", "search result only; the question remains open"}});
    return kOk;
  }
  out << "models_examined: " << res.models_examined << "\n"
      << "unidentifiable_models: " << res.unidentifiable_models << "\n"
      << "leak_additions: " << res.leak_additions << "\n"
      << "counterexamples: " << res.counterexamples.size() << "\n";
  for (const auto& c : res.counterexamples) out << "  add leak " << c.leak << " to " << serialize_model(c.model) << "\n";
  out << "seed: " << g.seed << "\ntrials: " << g.trials << "\n"
      << "note: search result only; the question remains open\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Identifiability of linear compartmental models", "compid"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Random seed for generic-point evaluation")->capture_default_str();
  app.add_option("--trials", g.trials, "Random evaluation points per rank test")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  std::string model_path;
  std::optional<int> output;
  bool full = false;
  bool reachable = false;
  bool certificate = false;
  bool with_inputs = false;
  std::vector<int> vertices;
  bool compare = false;
  std::string family_kind;
  int family_n = 0;
  int count = 100;
  int max_n = 4;

  auto* analyze = app.add_subcommand("analyze", "Equations, generic rank and verdict");
  analyze->add_option("model", model_path, "Model JSON file, or - for stdin")->required();

  auto* io_eq = app.add_subcommand("io-eq", "Input-output equations");
  io_eq->add_option("model", model_path)->required();
  io_eq->add_option("--output", output, "Output compartment (default: all outputs)");
  auto* full_flag = io_eq->add_flag("--full", full, "Use the full compartmental matrix");
  io_eq->add_flag("--reachable", reachable, "Use the output-reachable restriction (default)")->excludes(full_flag);

  auto* gcd = app.add_subcommand("gcd", "Input-output GCD");
  gcd->add_option("model", model_path)->required();
  gcd->add_option("--output", output)->required();
  gcd->add_flag("--certificate", certificate, "Check the complement-determinant factor");

  auto* reach = app.add_subcommand("reach", "Output-reachable and input-output-reachable subgraphs");
  reach->add_option("model", model_path)->required();
  reach->add_option("--output", output)->required();
  reach->add_flag("--with-inputs", with_inputs, "Also report the input-output-reachable split");

  auto* restrict_cmd = app.add_subcommand("restrict", "Restrict to an induced subgraph");
  restrict_cmd->add_option("model", model_path)->required();
  restrict_cmd->add_option("--vertices", vertices, "Comma-separated compartments")->required()->delimiter(',');

  auto* observable = app.add_subcommand("observable", "Compare a model with its observable component");
  observable->add_option("model", model_path)->required();

  auto* edit = app.add_subcommand("edit", "Apply one edit; --compare reports preservation");
  edit->add_option("model", model_path)->required();
  std::optional<int> add_input, delete_input, add_output, delete_output, add_leak, delete_leak;
  std::vector<int> add_edge, delete_edge;
  edit->add_option("--add-input", add_input);
  edit->add_option("--delete-input", delete_input);
  edit->add_option("--add-output", add_output);
  edit->add_option("--delete-output", delete_output);
  edit->add_option("--add-leak", add_leak);
  edit->add_option("--delete-leak", delete_leak);
  edit->add_option("--add-edge", add_edge, "FROM TO")->expected(2);
  edit->add_option("--delete-edge", delete_edge, "FROM TO")->expected(2);
  edit->add_flag("--compare", compare, "Report verdicts before and after");

  auto* family = app.add_subcommand("family", "Print a catenary, cycle or mammillary model");
  family->add_option("kind", family_kind)->required()->check(CLI::IsMember({"catenary", "cycle", "mammillary"}));
  family->add_option("--n", family_n, "Number of compartments")->required();

  auto* probe = app.add_subcommand("probe-leak-question", "Search for a leak that makes a model identifiable");
  probe->add_option("--count", count, "Random models to examine")->check(CLI::PositiveNumber)->capture_default_str();
  probe->add_option("--max-n", max_n, "Largest model size")->check(CLI::Range(1, 8))->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*family) {
      Model m;
      try {
        m = generate_family(parse_family(family_kind), family_n);
      } catch (const std::invalid_argument& e) {
        throw Failure(kPrecondition, e.what());
      }
      if (g.as_json())
        emit(out, json::parse(serialize_model(m)));
      else
        out << serialize_model(m) << "\n";
      return kOk;
    }
    if (*probe) return cmd_probe(count, max_n, g, out);

    std::optional<Edit> the_edit;
    if (*edit) {
      std::vector<Edit> edits;
      if (add_input) edits.push_back(Edit::add_input(*add_input));
      if (delete_input) edits.push_back(Edit::delete_input(*delete_input));
      if (add_output) edits.push_back(Edit::add_output(*add_output));
      if (delete_output) edits.push_back(Edit::delete_output(*delete_output));
      if (add_leak) edits.push_back(Edit::add_leak(*add_leak));
      if (delete_leak) edits.push_back(Edit::delete_leak(*delete_leak));
      if (!add_edge.empty()) edits.push_back(Edit::add_edge(add_edge[0], add_edge[1]));
      if (!delete_edge.empty()) edits.push_back(Edit::delete_edge(delete_edge[0], delete_edge[1]));
      if (edits.size() != 1) throw Failure(kUsage, "edit needs exactly one --add-* or --delete-* option");
      the_edit = edits.front();
    }

    const Model m = load_model(model_path, in);
    try {
      if (*analyze) return cmd_analyze(m, g, out);
      if (*io_eq) return cmd_io_eq(m, output, full, g, out);
      if (*gcd) return cmd_gcd(m, *output, certificate, g, out, err);
      if (*reach) return cmd_reach(m, *output, with_inputs, g, out);
      if (*restrict_cmd) return cmd_restrict(m, vertices, g, out);
      if (*observable) return cmd_observable(m, g, out, err);
      if (*edit) return cmd_edit(m, *the_edit, compare, g, out, err);
    } catch (const std::invalid_argument& e) {
      throw Failure(kPrecondition, e.what());
    }
  } catch (const Failure& f) {
    err << "error: " << f.what() << "\n";
    return f.code();
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  err << "error: no subcommand\n";
  return kUsage;
}

}  // namespace compid::cli
