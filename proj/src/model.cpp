#include "compid/model.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace compid {

using Kind = ModelError::Kind;

bool Model::has_edge(int from, int to) const {
  return std::binary_search(edges.begin(), edges.end(), Edge{from, to});
}
bool Model::has_input(int k) const { return std::binary_search(inputs.begin(), inputs.end(), k); }
bool Model::has_output(int k) const { return std::binary_search(outputs.begin(), outputs.end(), k); }
bool Model::has_leak(int k) const { return std::binary_search(leaks.begin(), leaks.end(), k); }

namespace {

void check_index(int n, int k, const std::string& where) {
  if (k < 1 || k > n)
    throw ModelError(Kind::IndexOutOfRange, where,
                     "compartment " + std::to_string(k) + " outside 1.." + std::to_string(n));
}

void sort_unique(std::vector<int>& v, int n, const std::string& where) {
  for (std::size_t k = 0; k < v.size(); ++k) check_index(n, v[k], where + "/" + std::to_string(k));
  std::sort(v.begin(), v.end());
  if (auto it = std::adjacent_find(v.begin(), v.end()); it != v.end())
    throw ModelError(Kind::Duplicate, where, "duplicate compartment " + std::to_string(*it));
}

}  // namespace

Model make_model(int n, std::vector<Edge> edges, std::vector<int> inputs, std::vector<int> outputs,
                 std::vector<int> leaks) {
  if (n < 1) throw ModelError(Kind::Schema, "/compartments", "must be a positive integer");
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string where = "/edges/" + std::to_string(k);
    check_index(n, edges[k].from, where + "/0");
    check_index(n, edges[k].to, where + "/1");
    if (edges[k].from == edges[k].to)
      throw ModelError(Kind::SelfLoop, where, "self-loop on compartment " + std::to_string(edges[k].from));
  }
  std::sort(edges.begin(), edges.end());
  if (auto it = std::adjacent_find(edges.begin(), edges.end()); it != edges.end())
    throw ModelError(Kind::Duplicate, "/edges",
                     "duplicate edge [" + std::to_string(it->from) + "," + std::to_string(it->to) + "]");
  sort_unique(inputs, n, "/inputs");
  sort_unique(outputs, n, "/outputs");
  sort_unique(leaks, n, "/leaks");
  return Model{n, std::move(edges), std::move(inputs), std::move(outputs), std::move(leaks)};
}

namespace {

int as_int(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ModelError(Kind::Schema, where, "expected an integer");
  const auto v = j.get<long long>();
  if (v < -1000000 || v > 1000000) throw ModelError(Kind::IndexOutOfRange, where, "integer out of range");
  return static_cast<int>(v);
}

std::vector<int> int_array(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array()) throw ModelError(Kind::Schema, where, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(as_int(j[k], where + "/" + std::to_string(k)));
  return out;
}

}  // namespace

Model parse_model(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ModelError(Kind::Syntax, "byte " + std::to_string(e.byte), e.what());
  }
  if (!doc.is_object()) throw ModelError(Kind::Schema, "/", "model must be a JSON object");
  static const std::set<std::string> known{"compartments", "edges", "inputs", "outputs", "leaks"};
  for (const auto& [key, value] : doc.items())
    if (!known.contains(key)) throw ModelError(Kind::Schema, "/" + key, "unknown key");
  for (const auto& key : known)
    if (!doc.contains(key)) throw ModelError(Kind::Schema, "/" + key, "missing key");

  const int n = as_int(doc["compartments"], "/compartments");
  const auto& jedges = doc["edges"];
  if (!jedges.is_array()) throw ModelError(Kind::Schema, "/edges", "expected an array of [from, to] pairs");
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < jedges.size(); ++k) {
    const std::string where = "/edges/" + std::to_string(k);
    const auto& e = jedges[k];
    if (!e.is_array() || e.size() != 2) throw ModelError(Kind::Schema, where, "expected a [from, to] pair");
    edges.push_back(Edge{as_int(e[0], where + "/0"), as_int(e[1], where + "/1")});
  }
  Model m = make_model(n, std::move(edges), int_array(doc["inputs"], "/inputs"),
                       int_array(doc["outputs"], "/outputs"), int_array(doc["leaks"], "/leaks"));
  if (m.outputs.empty()) throw ModelError(Kind::EmptyOutputs, "/outputs", "Out must be nonempty");
  return m;
}

std::string serialize_model(const Model& m) {
  nlohmann::ordered_json j;
  j["compartments"] = m.n;
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : m.edges) j["edges"].push_back({e.from, e.to});
  j["inputs"] = m.inputs;
  j["outputs"] = m.outputs;
  j["leaks"] = m.leaks;
  return j.dump();
}

std::vector<Param> parameter_list(const Model& m) {
  std::vector<Param> out;
  for (const auto& e : m.edges) out.push_back(e.param());
  std::sort(out.begin(), out.end());
  for (int k : m.leaks) out.push_back(Param::leak(k));
  return out;
}

Family parse_family(std::string_view name) {
  if (name == "catenary") return Family::Catenary;
  if (name == "cycle") return Family::Cycle;
  if (name == "mammillary") return Family::Mammillary;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

Model generate_family(Family kind, int n) {
  std::vector<Edge> edges;
  switch (kind) {
    case Family::Catenary:
      if (n < 2) throw std::invalid_argument("catenary model needs n >= 2");
      for (int k = 1; k < n; ++k) {
        edges.push_back({k, k + 1});
        edges.push_back({k + 1, k});
      }
      break;
    case Family::Cycle:
      if (n < 3) throw std::invalid_argument("cycle model needs n >= 3");
      for (int k = 1; k <= n; ++k) edges.push_back({k, k % n + 1});
      break;
    case Family::Mammillary:
      if (n < 2) throw std::invalid_argument("mammillary model needs n >= 2");
      for (int k = 2; k <= n; ++k) {
        edges.push_back({1, k});
        edges.push_back({k, 1});
      }
      break;
  }
  return make_model(n, std::move(edges), {1}, {1}, {});
}

CompartmentalMatrix::CompartmentalMatrix(std::vector<int> labels, std::vector<std::vector<Poly>> entries)
    : labels_(std::move(labels)), entries_(std::move(entries)) {
  if (entries_.size() != labels_.size()) throw std::invalid_argument("CompartmentalMatrix: label count mismatch");
  for (const auto& row : entries_)
    if (row.size() != labels_.size()) throw std::invalid_argument("CompartmentalMatrix: not square");
}

const Poly& CompartmentalMatrix::entry(int row_label, int col_label) const {
  auto pos = [this](int label) {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw std::out_of_range("label " + std::to_string(label) + " not in matrix");
    return static_cast<std::size_t>(it - labels_.begin());
  };
  return entries_[pos(row_label)][pos(col_label)];
}

CompartmentalMatrix CompartmentalMatrix::principal(const std::vector<int>& labels) const {
  std::vector<int> keep = labels;
  std::sort(keep.begin(), keep.end());
  std::vector<std::size_t> idx;
  for (int l : keep) {
    auto it = std::find(labels_.begin(), labels_.end(), l);
    if (it == labels_.end()) throw std::out_of_range("label " + std::to_string(l) + " not in matrix");
    idx.push_back(static_cast<std::size_t>(it - labels_.begin()));
  }
  std::vector<std::vector<Poly>> sub(idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) sub[r].push_back(entries_[idx[r]][idx[c]]);
  return CompartmentalMatrix(std::move(keep), std::move(sub));
}

CompartmentalMatrix compartmental_matrix(const Model& m) {
  const auto n = static_cast<std::size_t>(m.n);
  std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n));
  for (const auto& e : m.edges) {
    const Poly p = Poly::var(e.param());
    a[static_cast<std::size_t>(e.to - 1)][static_cast<std::size_t>(e.from - 1)] += p;
    a[static_cast<std::size_t>(e.from - 1)][static_cast<std::size_t>(e.from - 1)] -= p;
  }
  for (int k : m.leaks) a[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(k - 1)] -= Poly::var(Param::leak(k));
  std::vector<int> labels(n);
  for (std::size_t k = 0; k < n; ++k) labels[k] = static_cast<int>(k + 1);
  return CompartmentalMatrix(std::move(labels), std::move(a));
}

LambdaMatrix char_matrix(const CompartmentalMatrix& a) {
  std::vector<std::vector<LambdaPoly>> out(a.size());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) {
      LambdaPoly e(-a.at(r, c));
      if (r == c) e += LambdaPoly::lambda();
      out[r].push_back(std::move(e));
    }
  return LambdaMatrix(a.labels(), std::move(out));
}

}  // namespace compid
