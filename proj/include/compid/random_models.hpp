#pragma once

#include "compid/model.hpp"

#include <random>

namespace compid {

/// Knobs for random model generation used by property suites and probes.
struct RandomModelOptions {
  int min_n = 1;
  int max_n = 5;
  double edge_prob = 0.35;
  double input_prob = 0.3;
  double output_prob = 0.3;
  double leak_prob = 0.25;
  bool require_input = true;
  bool strongly_connected = false;
};

/// Random model with at least one output (and one input when required).
/// Strongly connected models start from a Hamiltonian cycle over a random
/// vertex order and then add each remaining edge with edge_prob.
Model random_model(std::mt19937_64& rng, const RandomModelOptions& opts);

}  // namespace compid
