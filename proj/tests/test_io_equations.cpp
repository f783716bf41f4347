#include "compid/graph.hpp"
#include "compid/io_equations.hpp"
#include "compid/random_models.hpp"

#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace compid;
using namespace compid::test;

namespace {

const LambdaPoly& rhs(const IoEquation& eq, int j) { return eq.rhs.at(j); }

LambdaPoly p1() {
  return s * s + lp(a(0, 1) + a(2, 1) + a(1, 2) + a(3, 2)) * s +
         lp(a(0, 1) * a(1, 2) + a(0, 1) * a(3, 2) + a(2, 1) * a(3, 2));
}

LambdaPoly block_b() { return s * s + lp(a(4, 3) + a(0, 4) + a(3, 4)) * s + lp(a(0, 4) * a(4, 3)); }

}  // namespace

TEST_SUITE("io_equations") {
  TEST_CASE("caution example") {
    const IoEquation eq = io_equation_reachable(caution(), 2);
    CHECK(eq.lhs == s * (s + lp(a(2, 1))));
    REQUIRE(eq.rhs.size() == 1);
    CHECK(rhs(eq, 2) == s + lp(a(2, 1)));
    CHECK(eq.vertices == std::vector<int>{1, 2});
    CHECK(eq.source == IoEquation::Source::Reachable);
    CHECK(eq.to_string() == "y2^(2) + a_2_1*y2^(1) = u2^(1) + a_2_1*u2^(0)");
  }

  TEST_CASE("the two-block model, output 1 after restriction") {
    const IoEquation eq = io_equation_reachable(two_block(), 1);
    CHECK(eq.vertices == std::vector<int>{1, 2});
    CHECK(eq.lhs == p1());
    REQUIRE(eq.rhs.size() == 1);
    CHECK(rhs(eq, 1) == s + lp(a(1, 2) + a(3, 2)));
  }

  TEST_CASE("the two-block model, output 3") {
    const IoEquation eq = io_equation_reachable(two_block(), 3);
    CHECK(eq.vertices == std::vector<int>{1, 2, 3, 4});
    const LambdaPoly lhs = p1() * block_b();
    CHECK(eq.lhs == lhs);
    // Third-order coefficient carries a plus sign.
    CHECK(eq.lhs.coeff(3) == a(0, 1) + a(2, 1) + a(1, 2) + a(3, 2) + a(4, 3) + a(0, 4) + a(3, 4));
    CHECK(eq.lhs.coeff(0) == (a(0, 1) * a(1, 2) + a(0, 1) * a(3, 2) + a(2, 1) * a(3, 2)) * a(0, 4) * a(4, 3));
    REQUIRE(eq.rhs.size() == 2);
    CHECK(rhs(eq, 1) == lp(a(2, 1) * a(3, 2)) * (s + lp(a(0, 4) + a(3, 4))));
    CHECK(rhs(eq, 3) == p1() * (s + lp(a(0, 4) + a(3, 4))));
    CHECK(io_equation_full(two_block(), 3).lhs == lhs);
  }

  TEST_CASE("the two-block model, output 1 in full form") {
    const IoEquation eq = io_equation_full(two_block(), 1);
    CHECK(eq.lhs == p1() * block_b());
    REQUIRE(eq.rhs.size() == 1);  // the u3 minor vanishes
    CHECK(rhs(eq, 1) == (s + lp(a(1, 2) + a(3, 2))) * block_b());
  }

  TEST_CASE("three-compartment star, both forms") {
    const IoEquation full = io_equation_full(three_star(), 1);
    CHECK(full.lhs == s * s * s + lp(a(3, 1) + a(3, 2)) * s * s + lp(a(3, 1) * a(3, 2)) * s);
    CHECK(rhs(full, 1) == s * s + lp(a(3, 2)) * s);
    const IoEquation red = io_equation_reachable(three_star(), 1);
    CHECK(red.lhs == s + lp(a(3, 1)));
    CHECK(rhs(red, 1).is_one());
    CHECK(red.to_string() == "y1^(1) + a_3_1*y1^(0) = u1^(0)");
  }

  TEST_CASE("homogeneous equation of the leaky chain") {
    const IoEquation eq = io_equation_reachable(leaky_chain(), 1);
    CHECK(eq.lhs == s + lp(a(0, 1) + a(2, 1)));
    CHECK(eq.rhs.empty());
    CHECK(eq.to_string() == "y1^(1) + (a_2_1+a_0_1)*y1^(0) = 0");
  }

  TEST_CASE("two-compartment equations from the edit examples") {
    CHECK(io_equation_reachable(chain_out1(), 1).lhs == s + lp(a(2, 1)));
    CHECK(io_equation_reachable(chain_out1_leak1(), 1).lhs == s + lp(a(0, 1) + a(2, 1)));
    CHECK(io_equation_reachable(chain_out2(), 2).lhs == s * s + lp(a(2, 1)) * s);
    CHECK(io_equation_reachable(two_cycle_out2(), 2).lhs == s * s + lp(a(1, 2) + a(2, 1)) * s);
    CHECK(io_equation_reachable(two_cycle_out1_leak1(), 1).lhs ==
          s * s + lp(a(0, 1) + a(1, 2) + a(2, 1)) * s + lp(a(0, 1) * a(1, 2)));
    const IoEquation eq = io_equation_reachable(two_cycle_leak(), 1);
    CHECK(eq.lhs == s * s + lp(a(0, 1) + a(2, 1) + a(1, 2)) * s + lp(a(0, 1) * a(1, 2)));
    CHECK(rhs(eq, 1) == s + lp(a(1, 2)));
    const IoEquation one = io_equation_reachable(single_leaky(), 1);
    CHECK(one.lhs == s + lp(a(0, 1)));
    CHECK(rhs(one, 1).is_one());
  }

  TEST_CASE("non-output is rejected") {
    CHECK_THROWS_AS(io_equation_reachable(two_block(), 2), std::invalid_argument);
    CHECK_THROWS_AS(io_equation_full(two_block(), 4), std::invalid_argument);
  }

  TEST_CASE("input-output gcds") {
    CHECK(io_gcd(caution(), 2) == s + lp(a(2, 1)));
    CHECK(io_gcd(two_block(), 1) == block_b());
    CHECK(io_gcd(three_star(), 1) == s * (s + lp(a(3, 2))));
    const Model scc = make_model(3, {{1, 2}, {2, 1}, {2, 3}}, {1}, {1}, {1});
    const Model strongly = make_model(2, {{1, 2}, {2, 1}}, {1}, {1}, {1});
    CHECK(io_gcd(strongly, 1).is_one());
    CHECK(io_gcd(two_cycle_leak(), 1).is_one());
    // Output without any input: gcd of the determinant alone.
    CHECK(io_gcd(chain_out2(), 2) == s * s + lp(a(2, 1)) * s);
    CHECK_FALSE(io_gcd(scc, 1).is_one());
  }

  TEST_CASE("gcd certificate on the two-block model") {
    const GcdCertificate c = gcd_factor_certificate(two_block(), 1);
    CHECK(c.reachable == std::vector<int>{1, 2});
    CHECK(c.complement == std::vector<int>{3, 4});
    CHECK(c.divisor == block_b());
    CHECK(c.divides);
    CHECK_FALSE(c.gcd_is_one);
    CHECK(c.corollary_holds());
    CHECK_THROWS_AS(gcd_factor_certificate(leaky_chain(), 1), std::invalid_argument);
  }

  TEST_CASE("reachable form equals the full form of the restriction") {
    std::mt19937_64 rng(31);
    RandomModelOptions opts;
    opts.require_input = false;
    for (int k = 0; k < 60; ++k) {
      const Model m = random_model(rng, opts);
      for (int i : m.outputs) {
        const IoEquation red = io_equation_reachable(m, i);
        const RestrictedModel r = restrict_to(m, output_reachable(m, i));
        const IoEquation via = io_equation_full(r, i);
        CHECK(red.lhs == via.lhs);
        CHECK(red.rhs == via.rhs);
        CHECK(red.lhs.degree() == static_cast<int>(red.vertices.size()));
        CHECK(red.lhs.is_monic());
      }
    }
  }

  TEST_CASE("input minor is nonzero exactly when the input reaches the output") {
    std::mt19937_64 rng(32);
    for (int k = 0; k < 60; ++k) {
      const Model m = random_model(rng, RandomModelOptions{});
      const Digraph g = Digraph::of(m);
      for (int i : m.outputs) {
        const auto anc = ancestors(g, i);
        const IoEquation full = io_equation_full(m, i);
        for (int j : m.inputs)
          CHECK(full.rhs.contains(j) == std::binary_search(anc.begin(), anc.end(), j));
      }
    }
  }

  TEST_CASE("determinant factors over strong components") {
    std::mt19937_64 rng(33);
    RandomModelOptions opts;
    opts.require_input = false;
    for (int k = 0; k < 60; ++k) {
      const Model m = random_model(rng, opts);
      const CompartmentalMatrix a_ = compartmental_matrix(m);
      LambdaPoly product(Poly(1));
      for (const auto& c : strong_components(m)) product = product * determinant(char_matrix(a_.principal(c.vertices)));
      CHECK(determinant(char_matrix(a_)) == product);
    }
  }

  TEST_CASE("strongly connected models with an input have gcd one") {
    std::mt19937_64 rng(34);
    RandomModelOptions opts;
    opts.strongly_connected = true;
    for (int k = 0; k < 40; ++k) {
      const Model m = random_model(rng, opts);
      for (int i : m.outputs) CHECK(io_gcd(m, i).is_one());
    }
  }

  TEST_CASE("gcd certificate on random models") {
    std::mt19937_64 rng(35);
    int checked = 0;
    while (checked < 40) {
      const Model m = random_model(rng, RandomModelOptions{});
      for (int i : m.outputs) {
        if (!input_output_reachable(m, i)) continue;
        const GcdCertificate c = gcd_factor_certificate(m, i);
        CHECK(c.divides);
        CHECK(c.corollary_holds());
        ++checked;
      }
    }
  }

  TEST_CASE("full-form minors match cofactor expansion") {
    const LambdaMatrix m = char_matrix(compartmental_matrix(two_block()));
    std::vector<std::vector<LambdaPoly>> rows;
    for (std::size_t r = 1; r < 4; ++r) {
      auto& row = rows.emplace_back();
      for (std::size_t c = 0; c < 4; ++c)
        if (c != 2) row.push_back(m.at(r, c));
    }
    CHECK(minor_det(m, 1, 3) == cofactor_determinant(rows));
  }
}
