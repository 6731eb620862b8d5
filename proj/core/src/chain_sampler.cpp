#include "permlab/chain_sampler.hpp"

#include <vector>

#include "permlab/errors.hpp"
#include "permlab/parallel.hpp"
#include "linked_perm.hpp"

namespace permlab {

void ChainConfig::validate() const {
  if (!(p > 0.0 && p < 1.0)) throw PreconditionError("p must lie strictly between 0 and 1");
  if (n_target < 1) throw PreconditionError("n must be >= 1");
}

Permutation inflate_at_value(const Permutation& tau, int j, Sign s) {
  const int n = tau.size();
  if (j < 1 || j > n) throw PreconditionError("inflate_at_value: j out of range");
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n) + 1);
  for (int x : tau.entries()) {
    if (x < j) {
      v.push_back(x);
    } else if (x > j) {
      v.push_back(x + 1);
    } else if (s == Sign::Plus) {
      v.push_back(j);
      v.push_back(j + 1);
    } else {
      v.push_back(j + 1);
      v.push_back(j);
    }
  }
  return make_unchecked(std::move(v));
}

Permutation inflate_at_position(const Permutation& tau, int k, Sign s) {
  if (k < 1 || k > tau.size()) throw PreconditionError("inflate_at_position: k out of range");
  return inflate_at_value(tau, tau(k), s);
}

Permutation compose_split(const Permutation& tau, const Permutation& rho, Sign s) {
  return s == Sign::Plus ? direct_sum(tau, rho) : skew_sum(tau, rho);
}


ChainSample sample_chain(int n, double p, Rng& rng) {
  ChainConfig{p, 0, n}.validate();
  detail::LinkedPerm lists(n);
  DecoratedTree tree;
  std::vector<int> leaf_of(static_cast<std::size_t>(n), -1);
  leaf_of[0] = tree.root();
  for (int k = 1; k < n; ++k) {
    const int e = static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
    const Sign s = rng.bernoulli(p) ? Sign::Plus : Sign::Minus;
    lists.inflate(e, k, s);
    // The leaf sitting at the chosen point's position becomes step k.
    const int left = tree.split_leaf(leaf_of[static_cast<std::size_t>(e)], s, k);
    leaf_of[static_cast<std::size_t>(e)] = left;
    leaf_of[static_cast<std::size_t>(k)] = left + 1;
  }
  return {lists.read(n), std::move(tree)};
}

Permutation sample_chain_perm(int n, double p, Rng& rng) {
  ChainConfig{p, 0, n}.validate();
  detail::LinkedPerm lists(n);
  for (int k = 1; k < n; ++k) {
    const int e = static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
    const Sign s = rng.bernoulli(p) ? Sign::Plus : Sign::Minus;
    lists.inflate(e, k, s);
  }
  return lists.read(n);
}

ChainSample sample_chain(const ChainConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  return sample_chain(cfg.n_target, cfg.p, rng);
}

SimpleGraph sample_cograph_chain(int n, double p, Rng& rng) {
  ChainConfig{p, 0, n}.validate();
  SimpleGraph g(n);
  for (int k = 1; k < n; ++k) {
    // current vertices are 1..k, the copy is k+1
    const int v = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
    const bool join = !rng.bernoulli(p);
    for (int w = 1; w <= k; ++w)
      if (w != v && g.adjacent(v, w)) g.add_edge(k + 1, w);
    if (join) g.add_edge(k + 1, v);
  }
  return g;
}

SimpleGraph sample_cograph_chain(const ChainConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  return sample_cograph_chain(cfg.n_target, cfg.p, rng);
}

std::vector<Permutation> sample_chain_batch(const ChainConfig& cfg, int count, int threads) {
  cfg.validate();
  if (count < 0) throw PreconditionError("count must be >= 0");
  std::vector<Permutation> out(static_cast<std::size_t>(count));
  parallel_for(count, threads, [&](std::int64_t i) {
    Rng rng = Rng::stream(cfg.seed, static_cast<std::uint64_t>(i));
    out[static_cast<std::size_t>(i)] = sample_chain_perm(cfg.n_target, cfg.p, rng);
  });
  return out;
}

}  // namespace permlab
