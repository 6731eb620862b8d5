#pragma once

#include <cstdint>
#include <vector>

#include "permlab/permutation.hpp"
#include "permlab/rng.hpp"
#include "permlab/types.hpp"

namespace permlab {

// Nonnegative +-1 path of length 2m from 0 to 0, with a sign attached to
// every strict local minimum (the interior valleys).
struct DiscreteExcursion {
  int m = 1;
  std::vector<int> steps;    // +1 / -1, size 2m
  std::vector<int> height;   // partial sums, size 2m+1, height[0] = 0
  std::vector<int> minima;   // vertex indices of strict local minima, increasing
  std::vector<Sign> signs;   // one per entry of minima

  void validate() const;
  // Sign at a vertex that is a strict local minimum.
  Sign sign_at(int vertex) const;
  bool is_local_min(int vertex) const;
};

// Uniform over the Catalan(m) paths: a uniform arrangement of m+1 up steps
// and m down steps is rotated to start after its first minimum (cycle lemma)
// and the leading up step dropped. Plus with probability p at each minimum.
DiscreteExcursion sample_excursion(int m, double p, Rng& rng);

// Leftmost argmin of the height on [x, y]; Incomparable if it is x or y
// (not an interior local minimum). Before means x precedes y.
Comparison brownian_order(const DiscreteExcursion& e, int x, int y);

// Permutation on the m peaks of the path: consecutive peaks are separated by
// one valley, and peaks are compared through the lowest valley between them.
Permutation brownian_permutation(const DiscreteExcursion& e);

enum class Model { Recursive, Brownian };

struct Estimate {
  double value = 0.0;
  double stderr_ = 0.0;
};

// Average of des(pattern)/(k-1) over reps size-k patterns drawn from one
// realization: lambda_{n_perm} for Recursive, an excursion with m = n_perm for
// Brownian.
Estimate dn_statistic(Model model, double p, int n_perm, int k, int reps, std::uint64_t seed);

struct CornerFrequencies {
  double bl = 0.0;
  double tl = 0.0;
  double both = 0.0;
  int reps = 0;
};

// BL: some diagram point in [0,eps]^2; TL: some point in [0,eps] x [1-eps,1].
bool corner_bl(const Permutation& sigma, double eps);
bool corner_tl(const Permutation& sigma, double eps);

// Frequencies over reps independent realizations of size n (chain
// permutation or excursion with m = n).
CornerFrequencies corner_events(Model model, double p, double eps, int n, int reps,
                                std::uint64_t seed, int threads = 1);

}  // namespace permlab
