#pragma once

#include <map>

#include "permlab/decorated_tree.hpp"
#include "permlab/permutation.hpp"
#include "permlab/rational.hpp"

namespace permlab {

// Evaluates the tree bottom-up: leaves are the permutation 1, an internal
// node is the direct or skew sum of its children. Labels are ignored.
Permutation perm_of_tree(const DecoratedTree& t);

// Weighted count W(1,n) of decorated binary trees evaluating to pi, each
// tree weighted by 1 / prod(internal nodes below each internal node).
Rational increasing_tree_weight(const Permutation& pi);

// Number of increasing decorated binary trees T with perm_of_tree(T) = pi.
BigInt count_inc_trees(const Permutation& pi);

// N_inc(pi)/(n-1)! (1-p)^des p^(n-1-des).
Rational exact_pattern_prob(const Permutation& pi, const Rational& p);

inline constexpr int kDefaultExactBound = 8;

ExactDist exact_distribution(int n, const Rational& p, int bound = kDefaultExactBound);

// Same table with probabilities kept as polynomials in p.
std::map<Permutation, Polynomial> exact_distribution_symbolic(int n,
                                                              int bound = kDefaultExactBound);

// Binomial(n-1, 1-p) on {0..n-1}.
ExactLaw<int> descent_law(int n, const Rational& p);

// Push an exact permutation law forward through des().
ExactLaw<int> descent_marginal(const ExactDist& d);

}  // namespace permlab
