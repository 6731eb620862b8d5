#pragma once

#include <cstdint>
#include <vector>

#include "permlab/decorated_tree.hpp"
#include "permlab/graph.hpp"
#include "permlab/permutation.hpp"
#include "permlab/rng.hpp"
#include "permlab/types.hpp"

namespace permlab {

struct ChainConfig {
  double p = 0.5;
  std::uint64_t seed = 0;
  int n_target = 1;

  // Throws PreconditionError unless 0 < p < 1 and n_target >= 1.
  void validate() const;
};

// Replace value j by (j, j+1) under Plus or (j+1, j) under Minus after
// shifting every value above j.
Permutation inflate_at_value(const Permutation& tau, int j, Sign s);
// Same with j = tau(k).
Permutation inflate_at_position(const Permutation& tau, int k, Sign s);

Permutation compose_split(const Permutation& tau, const Permutation& rho, Sign s);

struct ChainSample {
  Permutation sigma;
  DecoratedTree history;
};

// Runs the inflation chain from the permutation 1 to size n_target, drawing
// the value j uniformly and Plus with probability p. The history tree gets one
// internal node per step, labelled by the step number.
ChainSample sample_chain(const ChainConfig& cfg);
ChainSample sample_chain(int n, double p, Rng& rng);
// Permutation only, same law and same draws as sample_chain.
Permutation sample_chain_perm(int n, double p, Rng& rng);

// Cograph chain: duplicate a uniform vertex v, the copy gets v's neighbours
// and is joined to v with probability 1-p.
SimpleGraph sample_cograph_chain(const ChainConfig& cfg);
SimpleGraph sample_cograph_chain(int n, double p, Rng& rng);

// count independent chain samples, sample i driven by Rng::stream(seed, i).
// Output is identical for every thread count.
std::vector<Permutation> sample_chain_batch(const ChainConfig& cfg, int count, int threads = 1);

}  // namespace permlab
