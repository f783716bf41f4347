#include "compid/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace compid {

bool Subgraph::contains(int v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

Digraph Digraph::of(const Model& m) {
  Digraph g;
  for (int k = 1; k <= m.n; ++k) g.vertices.push_back(k);
  g.edges = m.edges;
  return g;
}

namespace {

// Adjacency in vertex-position space; neighbor lists sorted for determinism.
struct Adjacency {
  std::vector<int> labels;
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::vector<std::size_t>> in;

  explicit Adjacency(const Digraph& g) : labels(g.vertices), out(g.vertices.size()), in(g.vertices.size()) {
    for (const auto& e : g.edges) {
      const auto f = index(e.from);
      const auto t = index(e.to);
      out[f].push_back(t);
      in[t].push_back(f);
    }
    for (auto& v : out) std::sort(v.begin(), v.end());
    for (auto& v : in) std::sort(v.begin(), v.end());
  }

  std::size_t index(int label) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label) throw std::invalid_argument("vertex " + std::to_string(label) + " not in graph");
    return static_cast<std::size_t>(it - labels.begin());
  }
};

std::vector<int> bfs(const Adjacency& adj, const std::vector<std::vector<std::size_t>>& next,
                     std::span<const int> sources) {
  std::vector<char> seen(adj.labels.size(), 0);
  std::deque<std::size_t> queue;
  for (int s : sources) {
    const auto k = adj.index(s);
    if (!seen[k]) {
      seen[k] = 1;
      queue.push_back(k);
    }
  }
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (auto w : next[v])
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
  }
  std::vector<int> out;
  for (std::size_t k = 0; k < seen.size(); ++k)
    if (seen[k]) out.push_back(adj.labels[k]);
  return out;
}

std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void require_output(const Model& m, int i) {
  if (!m.has_output(i)) throw std::invalid_argument("compartment " + std::to_string(i) + " is not an output");
}

}  // namespace

std::vector<Subgraph> strong_components(const Digraph& g) {
  // Tarjan.
  const Adjacency adj(g);
  const std::size_t n = adj.labels.size();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> stack;
  int counter = 0;
  std::vector<Subgraph> out;

  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (auto w : adj.out[v]) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      Subgraph c;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        c.vertices.push_back(adj.labels[w]);
      } while (w != v);
      std::sort(c.vertices.begin(), c.vertices.end());
      out.push_back(std::move(c));
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (index[v] < 0) visit(v);
  std::sort(out.begin(), out.end(),
            [](const Subgraph& a, const Subgraph& b) { return a.vertices.front() < b.vertices.front(); });
  return out;
}

std::vector<Subgraph> strong_components(const Model& m) { return strong_components(Digraph::of(m)); }

bool is_strongly_connected(const Model& m) { return strong_components(m).size() == 1; }

std::vector<int> ancestors(const Digraph& g, int v) {
  const Adjacency adj(g);
  const int src[] = {v};
  return bfs(adj, adj.in, src);
}

std::vector<int> descendants(const Digraph& g, std::span<const int> sources) {
  const Adjacency adj(g);
  return bfs(adj, adj.out, sources);
}

Subgraph output_reachable(const Model& m, int i) {
  require_output(m, i);
  return Subgraph{ancestors(Digraph::of(m), i)};
}

std::optional<Subgraph> input_output_reachable(const Model& m, int i) {
  require_output(m, i);
  const Digraph g = Digraph::of(m);
  const auto up = ancestors(g, i);
  const auto sources = set_intersection(up, m.inputs);
  if (sources.empty()) return std::nullopt;
  return Subgraph{set_intersection(up, descendants(g, sources))};
}

Subgraph observable_component(const Model& m) {
  const Digraph g = Digraph::of(m);
  std::set<int> all;
  for (int i : m.outputs)
    for (int v : ancestors(g, i)) all.insert(v);
  return Subgraph{{all.begin(), all.end()}};
}

bool output_connectable(const Model& m) {
  if (m.outputs.empty()) return false;
  return observable_component(m).vertices.size() == static_cast<std::size_t>(m.n);
}

bool input_connectable(const Model& m) {
  if (m.inputs.empty()) return false;
  return descendants(Digraph::of(m), m.inputs).size() == static_cast<std::size_t>(m.n);
}

BlockPartition block_partition(const Model& m, int i) {
  auto hbar = input_output_reachable(m, i);
  if (!hbar) throw std::invalid_argument("no input reaches output " + std::to_string(i));
  const Digraph g = Digraph::of(m);
  std::set<int> up;
  for (int v : hbar->vertices)
    for (int a : ancestors(g, v)) up.insert(a);
  BlockPartition p;
  p.reachable = hbar->vertices;
  p.upstream = set_difference({up.begin(), up.end()}, p.reachable);
  std::vector<int> all = g.vertices;
  p.downstream = set_difference(set_difference(all, p.reachable), p.upstream);
  return p;
}

Digraph RestrictedModel::graph() const { return Digraph{vertices, edges}; }

CompartmentalMatrix RestrictedModel::matrix() const {
  const std::size_t n = vertices.size();
  auto pos = [this](int label) {
    return static_cast<std::size_t>(std::lower_bound(vertices.begin(), vertices.end(), label) - vertices.begin());
  };
  std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n));
  for (const auto& e : edges) {
    const Poly p = Poly::var(e.param());
    a[pos(e.to)][pos(e.from)] += p;
    a[pos(e.from)][pos(e.from)] -= p;
  }
  for (const auto& [k, label] : leak_labels) a[pos(k)][pos(k)] -= label;
  return CompartmentalMatrix(vertices, std::move(a));
}

RestrictedModel restrict_to(const Model& m, const Subgraph& h) {
  RestrictedModel r;
  r.vertices = h.vertices;
  std::sort(r.vertices.begin(), r.vertices.end());
  r.vertices.erase(std::unique(r.vertices.begin(), r.vertices.end()), r.vertices.end());
  for (int v : r.vertices)
    if (v < 1 || v > m.n) throw std::invalid_argument("vertex " + std::to_string(v) + " not in model");
  const Subgraph hs{r.vertices};
  r.inputs = set_intersection(r.vertices, m.inputs);
  r.outputs = set_intersection(r.vertices, m.outputs);
  if (r.outputs.empty()) throw std::invalid_argument("restriction subgraph contains no output");
  for (int k : m.leaks)
    if (hs.contains(k)) r.leak_labels[k] += Poly::var(Param::leak(k));
  for (const auto& e : m.edges) {
    const bool from_in = hs.contains(e.from);
    const bool to_in = hs.contains(e.to);
    if (from_in && to_in)
      r.edges.push_back(e);
    else if (from_in)
      r.leak_labels[e.from] += Poly::var(e.param());
  }
  return r;
}

std::vector<std::vector<Edge>> incoming_spanning_trees(const Model& m, int root) {
  if (root < 1 || root > m.n) throw std::invalid_argument("root outside the model");
  std::vector<std::vector<Edge>> choices(static_cast<std::size_t>(m.n) + 1);
  for (const auto& e : m.edges)
    if (e.from != root) choices[static_cast<std::size_t>(e.from)].push_back(e);
  std::vector<int> others;
  for (int v = 1; v <= m.n; ++v)
    if (v != root) {
      if (choices[static_cast<std::size_t>(v)].empty()) return {};
      others.push_back(v);
    }

  std::vector<std::vector<Edge>> trees;
  std::vector<std::size_t> pick(others.size(), 0);
  std::vector<int> parent(static_cast<std::size_t>(m.n) + 1, 0);
  while (true) {
    for (std::size_t k = 0; k < others.size(); ++k)
      parent[static_cast<std::size_t>(others[k])] = choices[static_cast<std::size_t>(others[k])][pick[k]].to;
    bool acyclic = true;
    for (int v : others) {
      int cur = v;
      for (int steps = 0; cur != root; ++steps) {
        if (steps > m.n) {
          acyclic = false;
          break;
        }
        cur = parent[static_cast<std::size_t>(cur)];
      }
      if (!acyclic) break;
    }
    if (acyclic) {
      std::vector<Edge> t;
      for (std::size_t k = 0; k < others.size(); ++k) t.push_back(choices[static_cast<std::size_t>(others[k])][pick[k]]);
      std::sort(t.begin(), t.end());
      trees.push_back(std::move(t));
    }
    std::size_t k = 0;
    while (k < others.size()) {
      if (++pick[k] < choices[static_cast<std::size_t>(others[k])].size()) break;
      pick[k] = 0;
      ++k;
    }
    if (k == others.size()) break;
  }
  std::sort(trees.begin(), trees.end());
  return trees;
}

Poly tree_polynomial(const std::vector<std::vector<Edge>>& trees) {
  Poly total;
  for (const auto& t : trees) {
    Poly term(1);
    for (const auto& e : t) term *= Poly::var(e.param());
    total += term;
  }
  return total;
}

bool leak_coefficient_check(const Model& m) {
  if (m.leaks != std::vector<int>{1}) throw std::invalid_argument("leak_coefficient_check needs Leak = {1}");
  if (!is_strongly_connected(m)) throw std::invalid_argument("leak_coefficient_check needs a strongly connected graph");
  const LambdaPoly det = determinant(char_matrix(compartmental_matrix(m)));
  const Poly expected = Poly::var(Param::leak(1)) * tree_polynomial(incoming_spanning_trees(m, 1));
  return det.coeff(0) == expected;
}

}  // namespace compid
