#pragma once

#include <functional>
#include <string>
#include <vector>

#include "permlab/decorated_tree.hpp"
#include "permlab/graph.hpp"
#include "permlab/rational.hpp"

namespace permlab {

inline constexpr int kOracleBound = 8;

// Exact law of the inflation chain at size n: a forward pass over the state
// lattice, each step splitting mass over the k values and the two signs.
ExactDist enumerate(int n, const Rational& p);

// Exact law of lambda_n through the rank-insertion recursion (uniform
// position, then sign).
ExactDist enumerate_lambda(int n, const Rational& p);

// Law of lambda_{n+1} with a uniform point deleted, minus law of lambda_n.
// Returns the largest absolute entry.
Rational check_consistency(int n, const Rational& p);

// Mixture over I uniform on {1..n-1} of tau_I (+/-) rho_{n-I}, with Plus
// weighted p, minus enumerate(n,p). Largest absolute entry. n >= 2.
Rational check_self_similarity(int n, const Rational& p);

// Calls visit on every increasing decorated binary tree with n leaves
// ((n-1)! 2^(n-1) of them). Labels follow the insertion order.
void for_each_increasing_tree(int n, const std::function<void(const DecoratedTree&)>& visit);

// Brute-force N_inc via for_each_increasing_tree.
ExactLaw<Permutation> brute_inc_counts(int n);

using GraphLaw = ExactLaw<std::string>;

// Pushforward of enumerate(n,p) through inversion_graph, keyed by canonical form.
GraphLaw cograph_law(int n, const Rational& p);
// Forward pass of the cograph chain over canonical graph states.
GraphLaw cograph_chain_law(int n, const Rational& p);
// N_inc(H)/(n-1)! p^Z (1-p)^(n-1-Z) with N_inc(H) counted over increasing
// plane binary cotrees (Plus = union, Minus = join).
GraphLaw cograph_formula_law(int n, const Rational& p);

// Graph of a cotree: leaves in order are vertices 1..n, a Minus node joins
// every pair across its two subtrees.
SimpleGraph cotree_graph(const DecoratedTree& t);

}  // namespace permlab
