#include "compid/graph.hpp"
#include "compid/random_models.hpp"

#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace compid;
using namespace compid::test;

namespace {

using Vs = std::vector<int>;

Vs vs(const Subgraph& g) { return g.vertices; }

// Reachability by repeated relaxation; shares nothing with the BFS code.
std::set<std::pair<int, int>> closure(const Model& m) {
  std::set<std::pair<int, int>> r;
  for (int v = 1; v <= m.n; ++v) r.insert({v, v});
  for (const auto& e : m.edges) r.insert({e.from, e.to});
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 1; i <= m.n; ++i)
      for (int j = 1; j <= m.n; ++j)
        for (int k = 1; k <= m.n; ++k)
          if (r.contains({i, k}) && r.contains({k, j}) && r.insert({i, j}).second) grew = true;
  }
  return r;
}

// Laplacian minor -A with row and column `root` removed, as constant lambda-polys.
LambdaPoly reduced_laplacian_det(const Model& m, int root) {
  const CompartmentalMatrix a_ = compartmental_matrix(m);
  std::vector<std::vector<LambdaPoly>> rows;
  for (int r = 1; r <= m.n; ++r) {
    if (r == root) continue;
    auto& row = rows.emplace_back();
    for (int c = 1; c <= m.n; ++c)
      if (c != root) row.push_back(LambdaPoly(-a_.entry(r, c)));
  }
  return cofactor_determinant(rows);
}

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("strong components of the two-block model") {
    const auto comps = strong_components(two_block());
    REQUIRE(comps.size() == 2);
    CHECK(vs(comps[0]) == Vs{1, 2});
    CHECK(vs(comps[1]) == Vs{3, 4});
    CHECK_FALSE(is_strongly_connected(two_block()));
    CHECK(is_strongly_connected(generate_family(Family::Cycle, 4)));
    CHECK(is_strongly_connected(single_leaky()));
  }

  TEST_CASE("reachability on the two-block model") {
    const Model m = two_block();
    CHECK(vs(output_reachable(m, 1)) == Vs{1, 2});
    CHECK(vs(output_reachable(m, 3)) == Vs{1, 2, 3, 4});
    CHECK_THROWS_AS(output_reachable(m, 2), std::invalid_argument);
    CHECK(vs(*input_output_reachable(m, 1)) == Vs{1, 2});
    CHECK(vs(*input_output_reachable(m, 3)) == Vs{1, 2, 3, 4});
    CHECK(vs(observable_component(m)) == Vs{1, 2, 3, 4});
    CHECK(output_connectable(m));
    CHECK(input_connectable(m));
  }

  TEST_CASE("reachability on small examples") {
    CHECK(vs(output_reachable(three_star(), 1)) == Vs{1});
    CHECK(vs(observable_component(three_star())) == Vs{1});
    CHECK_FALSE(output_connectable(three_star()));
    CHECK(vs(output_reachable(leaky_chain(), 1)) == Vs{1});
    CHECK_FALSE(input_output_reachable(leaky_chain(), 1).has_value());
    CHECK_FALSE(input_connectable(leaky_chain()));
    // Input downstream of the output does not reach it.
    const Model m = make_model(2, {{1, 2}}, {2}, {1}, {1});
    CHECK_FALSE(input_output_reachable(m, 1).has_value());
  }

  TEST_CASE("input-output reachable excludes side branches") {
    // 1 -> 2 -> 3, 4 -> 2, 2 -> 5; input at 1, output at 3.
    const Model m = make_model(5, {{1, 2}, {2, 3}, {4, 2}, {2, 5}}, {1}, {3}, {});
    CHECK(vs(*input_output_reachable(m, 3)) == Vs{1, 2, 3});
    CHECK(vs(output_reachable(m, 3)) == Vs{1, 2, 3, 4});
    const BlockPartition bp = block_partition(m, 3);
    CHECK(bp.reachable == Vs{1, 2, 3});
    CHECK(bp.upstream == Vs{4});
    CHECK(bp.downstream == Vs{5});
  }

  TEST_CASE("ancestors and descendants agree with transitive closure") {
    std::mt19937_64 rng(21);
    RandomModelOptions opts;
    opts.require_input = false;
    for (int k = 0; k < 60; ++k) {
      const Model m = random_model(rng, opts);
      const auto r = closure(m);
      const Digraph g = Digraph::of(m);
      for (int v = 1; v <= m.n; ++v) {
        Vs anc, desc;
        for (int u = 1; u <= m.n; ++u) {
          if (r.contains({u, v})) anc.push_back(u);
          if (r.contains({v, u})) desc.push_back(u);
        }
        CHECK(ancestors(g, v) == anc);
        const int src[] = {v};
        CHECK(descendants(g, src) == desc);
      }
      // Strong components are the mutual-reachability classes.
      for (const auto& c : strong_components(m))
        for (int u : c.vertices)
          for (int w = 1; w <= m.n; ++w)
            CHECK(c.contains(w) == (r.contains({u, w}) && r.contains({w, u})));
    }
  }

  TEST_CASE("restriction of the two-block model to the first block") {
    const RestrictedModel r = restrict_to(two_block(), Subgraph{{1, 2}});
    CHECK(r.edges == std::vector<Edge>{{1, 2}, {2, 1}});
    CHECK(r.inputs == Vs{1});
    CHECK(r.outputs == Vs{1});
    REQUIRE(r.leak_labels.size() == 2);
    CHECK(r.leak_labels.at(1) == a(0, 1));
    CHECK(r.leak_labels.at(2) == a(3, 2));
    CHECK(r.parameter_count() == 4);
    CHECK(r.matrix() == compartmental_matrix(two_block()).principal({1, 2}));
    CHECK_THROWS_AS(restrict_to(two_block(), Subgraph{{2, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(restrict_to(two_block(), Subgraph{{1, 9}}), std::invalid_argument);
  }

  TEST_CASE("restriction matrix equals the principal submatrix") {
    std::mt19937_64 rng(22);
    RandomModelOptions opts;
    opts.require_input = false;
    for (int k = 0; k < 60; ++k) {
      const Model m = random_model(rng, opts);
      Vs h;
      for (int v = 1; v <= m.n; ++v)
        if (rng() % 2 == 0 || m.outputs.front() == v) h.push_back(v);
      const RestrictedModel r = restrict_to(m, Subgraph{h});
      CHECK(r.matrix() == compartmental_matrix(m).principal(h));
    }
  }

  TEST_CASE("incoming spanning trees of a 3-cycle and a catenary") {
    const auto cyc = incoming_spanning_trees(generate_family(Family::Cycle, 3), 1);
    REQUIRE(cyc.size() == 1);
    CHECK(cyc[0] == std::vector<Edge>{{2, 3}, {3, 1}});
    const auto cat = incoming_spanning_trees(generate_family(Family::Catenary, 3), 2);
    REQUIRE(cat.size() == 1);
    CHECK(tree_polynomial(cat) == a(2, 1) * a(2, 3));
    const Model two = make_model(3, {{1, 2}, {2, 1}, {2, 3}, {3, 2}, {1, 3}, {3, 1}}, {1}, {1}, {});
    CHECK(incoming_spanning_trees(two, 1).size() == 3);
    CHECK(incoming_spanning_trees(three_star(), 1).empty());
  }

  TEST_CASE("matrix-tree theorem on random strongly connected graphs") {
    std::mt19937_64 rng(23);
    RandomModelOptions opts;
    opts.strongly_connected = true;
    opts.leak_prob = 0;
    for (int k = 0; k < 30; ++k) {
      const Model m = random_model(rng, opts);
      for (int root = 1; root <= m.n; ++root) {
        const LambdaPoly minor = reduced_laplacian_det(m, root);
        CHECK(minor == LambdaPoly(tree_polynomial(incoming_spanning_trees(m, root))));
      }
    }
  }

  TEST_CASE("leak coefficient check") {
    for (Family f : {Family::Catenary, Family::Cycle, Family::Mammillary})
      for (int n = 3; n <= 5; ++n) {
        Model m = generate_family(f, n);
        m.leaks = {1};
        CHECK(leak_coefficient_check(m));
      }
    CHECK_THROWS_AS(leak_coefficient_check(two_block()), std::invalid_argument);
    CHECK_THROWS_AS(leak_coefficient_check(generate_family(Family::Cycle, 3)), std::invalid_argument);
  }
}
