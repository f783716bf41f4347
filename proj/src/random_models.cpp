#include "compid/random_models.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace compid {

namespace {

std::vector<int> random_subset(std::mt19937_64& rng, int n, double p, bool nonempty) {
  std::bernoulli_distribution coin(p);
  std::vector<int> out;
  for (int k = 1; k <= n; ++k)
    if (coin(rng)) out.push_back(k);
  if (out.empty() && nonempty) out.push_back(std::uniform_int_distribution<int>(1, n)(rng));
  return out;
}

}  // namespace

Model random_model(std::mt19937_64& rng, const RandomModelOptions& opts) {
  const int lo = opts.strongly_connected ? std::max(opts.min_n, 1) : opts.min_n;
  const int n = std::uniform_int_distribution<int>(lo, std::max(lo, opts.max_n))(rng);
  std::set<Edge> edges;
  if (opts.strongly_connected && n > 1) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t k = 0; k < order.size(); ++k) edges.insert({order[k], order[(k + 1) % order.size()]});
  }
  std::bernoulli_distribution coin(opts.edge_prob);
  for (int f = 1; f <= n; ++f)
    for (int t = 1; t <= n; ++t)
      if (f != t && coin(rng)) edges.insert({f, t});
  auto inputs = random_subset(rng, n, opts.input_prob, opts.require_input);
  auto outputs = random_subset(rng, n, opts.output_prob, true);
  auto leaks = random_subset(rng, n, opts.leak_prob, false);
  return make_model(n, {edges.begin(), edges.end()}, std::move(inputs), std::move(outputs), std::move(leaks));
}

}  // namespace compid
