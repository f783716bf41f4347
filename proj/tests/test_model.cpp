#include "compid/model.hpp"
#include "compid/random_models.hpp"

#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace compid;
using namespace compid::test;

namespace {

std::vector<std::string> names(const std::vector<Param>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.name());
  return out;
}

ModelError::Kind parse_kind(std::string_view text) {
  try {
    parse_model(text);
  } catch (const ModelError& e) {
    return e.kind();
  }
  FAIL("parse succeeded");
  return ModelError::Kind::Syntax;
}

}  // namespace

TEST_SUITE("model") {
  TEST_CASE("parse the the two-block model model") {
    const Model m = parse_model(
        R"({"compartments":4,"edges":[[1,2],[2,1],[2,3],[3,4],[4,3]],"inputs":[3,1],"outputs":[1,3],"leaks":[4,1]})");
    CHECK(m == two_block());
    CHECK(m.inputs == std::vector<int>{1, 3});
    CHECK(m.has_edge(2, 3));
    CHECK_FALSE(m.has_edge(3, 2));
    CHECK(m.has_leak(4));
  }

  TEST_CASE("parse errors carry a kind and location") {
    using K = ModelError::Kind;
    CHECK(parse_kind(R"({"compartments":2,)") == K::Syntax);
    CHECK(parse_kind(R"([1,2])") == K::Schema);
    CHECK(parse_kind(R"({"compartments":2,"edges":[],"inputs":[],"outputs":[1]})") == K::Schema);
    CHECK(parse_kind(R"({"compartments":2,"edges":[],"inputs":[],"outputs":[1],"leaks":[],"extra":1})") ==
          K::Schema);
    CHECK(parse_kind(R"({"compartments":2,"edges":[[1,3]],"inputs":[],"outputs":[1],"leaks":[]})") ==
          K::IndexOutOfRange);
    CHECK(parse_kind(R"({"compartments":2,"edges":[[1,1]],"inputs":[],"outputs":[1],"leaks":[]})") == K::SelfLoop);
    CHECK(parse_kind(R"({"compartments":2,"edges":[[1,2],[1,2]],"inputs":[],"outputs":[1],"leaks":[]})") ==
          K::Duplicate);
    CHECK(parse_kind(R"({"compartments":2,"edges":[],"inputs":[1,1],"outputs":[1],"leaks":[]})") == K::Duplicate);
    CHECK(parse_kind(R"({"compartments":2,"edges":[],"inputs":[],"outputs":[],"leaks":[]})") == K::EmptyOutputs);
    CHECK(parse_kind(R"({"compartments":0,"edges":[],"inputs":[],"outputs":[1],"leaks":[]})") == K::Schema);
    CHECK(parse_kind(R"({"compartments":2,"edges":[[1]],"inputs":[],"outputs":[1],"leaks":[]})") == K::Schema);
    CHECK(parse_kind(R"({"compartments":2,"edges":[],"inputs":["1"],"outputs":[1],"leaks":[]})") == K::Schema);
  }

  TEST_CASE("error location") {
    try {
      parse_model(R"({"compartments":2,"edges":[],"inputs":[],"outputs":[],"leaks":[]})");
      FAIL("expected throw");
    } catch (const ModelError& e) {
      CHECK(e.where() == "/outputs");
    }
  }

  TEST_CASE("serialize is canonical and round-trips") {
    CHECK(serialize_model(caution()) == R"({"compartments":2,"edges":[[1,2]],"inputs":[2],"outputs":[2],"leaks":[]})");
    std::mt19937_64 rng(3);
    RandomModelOptions opts;
    opts.require_input = false;
    for (int k = 0; k < 100; ++k) {
      const Model m = random_model(rng, opts);
      const std::string text = serialize_model(m);
      CHECK(parse_model(text) == m);
      CHECK(serialize_model(parse_model(text)) == text);
    }
  }

  TEST_CASE("parameter list order") {
    CHECK(names(parameter_list(two_block())) ==
          std::vector<std::string>{"a_1_2", "a_2_1", "a_3_2", "a_3_4", "a_4_3", "a_0_1", "a_0_4"});
    CHECK(names(parameter_list(generate_family(Family::Cycle, 3))) ==
          std::vector<std::string>{"a_1_3", "a_2_1", "a_3_2"});
  }

  TEST_CASE("compartmental matrix of the two-block model") {
    const CompartmentalMatrix a_ = compartmental_matrix(two_block());
    CHECK(a_.entry(1, 1) == -a(0, 1) - a(2, 1));
    CHECK(a_.entry(1, 2) == a(1, 2));
    CHECK(a_.entry(2, 2) == -a(1, 2) - a(3, 2));
    CHECK(a_.entry(4, 4) == -a(0, 4) - a(3, 4));
    CHECK(a_.entry(1, 3).is_zero());
    const CompartmentalMatrix p = a_.principal({1, 2});
    CHECK(p.labels() == std::vector<int>{1, 2});
    CHECK(p.entry(2, 1) == a(2, 1));
    CHECK_THROWS_AS(a_.entry(5, 1), std::out_of_range);
  }

  TEST_CASE("column sums are minus the leak parameter") {
    std::mt19937_64 rng(4);
    RandomModelOptions opts;
    opts.require_input = false;
    for (int k = 0; k < 50; ++k) {
      const Model m = random_model(rng, opts);
      const CompartmentalMatrix a_ = compartmental_matrix(m);
      for (int c = 1; c <= m.n; ++c) {
        Poly sum;
        for (int r = 1; r <= m.n; ++r) sum += a_.entry(r, c);
        CHECK(sum == (m.has_leak(c) ? -a(0, c) : Poly()));
      }
    }
  }

  TEST_CASE("families") {
    const Model cat = generate_family(Family::Catenary, 3);
    CHECK(cat.edges == std::vector<Edge>{{1, 2}, {2, 1}, {2, 3}, {3, 2}});
    CHECK(cat.inputs == std::vector<int>{1});
    CHECK(cat.outputs == std::vector<int>{1});
    CHECK(cat.leaks.empty());
    CHECK(generate_family(Family::Cycle, 3).edges == std::vector<Edge>{{1, 2}, {2, 3}, {3, 1}});
    CHECK(generate_family(Family::Mammillary, 3).edges == std::vector<Edge>{{1, 2}, {1, 3}, {2, 1}, {3, 1}});
    CHECK_THROWS_AS(generate_family(Family::Cycle, 2), std::invalid_argument);
    CHECK_THROWS_AS(generate_family(Family::Catenary, 1), std::invalid_argument);
    CHECK(parse_family("mammillary") == Family::Mammillary);
    CHECK_THROWS_AS(parse_family("star"), std::invalid_argument);
  }

  TEST_CASE("make_model sorts and validates") {
    const Model m = make_model(3, {{3, 1}, {1, 2}}, {2, 1}, {3}, {});
    CHECK(m.edges == std::vector<Edge>{{1, 2}, {3, 1}});
    CHECK(m.inputs == std::vector<int>{1, 2});
    CHECK_NOTHROW(make_model(2, {}, {}, {}, {}));
    CHECK_THROWS_AS(make_model(2, {{2, 2}}, {}, {1}, {}), ModelError);
    CHECK_THROWS_AS(make_model(2, {}, {}, {0}, {}), ModelError);
  }
}
