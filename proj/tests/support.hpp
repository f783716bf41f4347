#pragma once

// Shared fixtures: worked-example models and small builders for expected
// polynomials.

#include "compid/lambda_poly.hpp"
#include "compid/model.hpp"
#include "compid/poly.hpp"

#include <random>
#include <vector>

namespace compid::test {

/// a(i, j) is the parameter a_{ij}: edge j -> i, or the leak of j when i == 0.
inline Poly a(int i, int j) { return Poly::var(Param{i, j}); }
inline const LambdaPoly s = LambdaPoly::lambda();

inline LambdaPoly lp(const Poly& p) { return LambdaPoly(p); }

// Four compartments, 1 <-> 2 -> 3 <-> 4, In = Out = {1, 3}, Leak = {1, 4}.
inline Model two_block() { return make_model(4, {{1, 2}, {2, 1}, {2, 3}, {3, 4}, {4, 3}}, {1, 3}, {1, 3}, {1, 4}); }

// 1 -> 2 with input and output at 2.
inline Model caution() { return make_model(2, {{1, 2}}, {2}, {2}, {}); }

// 1 -> 3 <- 2, input and output at 1.
inline Model three_star() { return make_model(3, {{1, 3}, {2, 3}}, {1}, {1}, {}); }

// 1 -> 2, output at 1, leaks at 1 and 2, no input.
inline Model leaky_chain() { return make_model(2, {{1, 2}}, {}, {1}, {1, 2}); }

// 2-cycle with input, output and leak at 1.
inline Model two_cycle_leak() { return make_model(2, {{1, 2}, {2, 1}}, {1}, {1}, {1}); }

// Same with an extra output at 2.
inline Model two_cycle_leak_two_outputs() { return make_model(2, {{1, 2}, {2, 1}}, {1}, {1, 2}, {1}); }

// 1 -> 2 with output at 1 only.
inline Model chain_out1() { return make_model(2, {{1, 2}}, {}, {1}, {}); }

// 1 -> 2 with output at 1 and leak at 1.
inline Model chain_out1_leak1() { return make_model(2, {{1, 2}}, {}, {1}, {1}); }

// 1 -> 2 with output at 2.
inline Model chain_out2() { return make_model(2, {{1, 2}}, {}, {2}, {}); }

// 2-cycle with output at 2.
inline Model two_cycle_out2() { return make_model(2, {{1, 2}, {2, 1}}, {}, {2}, {}); }

// 2-cycle, output and leak at 1, no input.
inline Model two_cycle_out1_leak1() { return make_model(2, {{1, 2}, {2, 1}}, {}, {1}, {1}); }

// One compartment with input, output and leak.
inline Model single_leaky() { return make_model(1, {}, {1}, {1}, {1}); }

/// n x n matrix mixing zeros, constants, parameters and linear lambda terms.
inline LambdaMatrix random_lambda_matrix(std::mt19937_64& rng, int n) {
  const Param vars[] = {Param{1, 2}, Param{2, 1}, Param{2, 3}, Param::leak(1)};
  std::uniform_int_distribution<int> coef(-3, 3), pick(0, 3), kind(0, 4);
  std::vector<int> labels;
  std::vector<std::vector<LambdaPoly>> rows(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    labels.push_back(r + 1);
    for (int c = 0; c < n; ++c) {
      LambdaPoly e;
      switch (kind(rng)) {
        case 0: break;
        case 1: e = lp(Poly(coef(rng))); break;
        case 2: e = lp(Poly::var(vars[pick(rng)])); break;
        case 3: e = s + lp(Poly::var(vars[pick(rng)]) * Poly(coef(rng))); break;
        default: e = s * lp(Poly(coef(rng))) - lp(Poly::var(vars[pick(rng)])); break;
      }
      rows[static_cast<std::size_t>(r)].push_back(e);
    }
  }
  return LambdaMatrix(labels, rows);
}

}  // namespace compid::test
