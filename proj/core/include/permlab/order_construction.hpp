#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <utility>
#include <vector>

#include "permlab/chain_sampler.hpp"
#include "permlab/permutation.hpp"
#include "permlab/rng.hpp"
#include "permlab/step_function.hpp"
#include "permlab/types.hpp"

namespace permlab {

// The pair sequences (U_j, S_j), j = 1..k, with sentinels U_0 = 0, U_-1 = 1.
class OrderStream {
 public:
  OrderStream() = default;
  // Throws PreconditionError on unequal lengths, values outside (0,1) or ties.
  OrderStream(std::vector<double> u, std::vector<Sign> s);

  // k fresh pairs; Plus with probability p. A tie with an earlier U is
  // redrawn, so the values are always distinct.
  static OrderStream generate(int k, double p, Rng& rng);

  int length() const { return static_cast<int>(u_.size()); }
  // j in {-1, 0, 1, ..., length()}.
  double U(int j) const;
  Sign S(int j) const { return s_[static_cast<std::size_t>(j - 1)]; }
  const std::vector<double>& u() const { return u_; }
  const std::vector<Sign>& s() const { return s_; }

  // CSV "j,U,S" with U printed to 17 significant digits.
  void write_csv(std::ostream& os) const;

 private:
  std::vector<double> u_;
  std::vector<Sign> s_;
};

// Minimal j <= depth with U_j in (min(x,y), max(x,y)]; 0 if none. depth < 0
// means the whole stream.
int first_separating_index(const OrderStream& st, double x, double y, int depth = -1);

// Before means x precedes y. Incomparable when x == y or no index <= depth
// separates them.
Comparison precedes(const OrderStream& st, double x, double y, int depth = -1);

// phi_k(x) = Leb{y : y precedes x with separating index <= k}, by a single
// O(k) pass that tracks the cell of x.
double phi_k_at(const OrderStream& st, int k, double x);

// Same quantity straight from the definition: split [0,1] at the points
// U_0..U_k and x, evaluate the order once per piece. O(k^2); test oracle.
double phi_k_literal(const OrderStream& st, int k, double x);

// phi_k as a step function with left-closed cells at U_0..U_k.
StepFunction phi_k(const OrderStream& st, int k);

// One draw of (U, phi_K(U)) with U uniform and a fresh stream that is never
// stored: only the pairs landing in the current cell of U are generated.
std::pair<double, double> sample_phi_point(double p, int K, Rng& rng);

// Largest gap among the sorted points {0, U_1..U_k, 1}.
double max_gap(const OrderStream& st, int k);

// Fraction of {U_0..U_{n-1}} strictly preceding x.
double empirical_prec_mass(const OrderStream& st, int n, double x);

// Points x_1 < ... < x_m (already sorted); prec(a, b) compares x_a and x_b
// (0-based). Value of point k is 1 + #{x : x precedes x_k}. Throws
// IncomparablePairError if some pair is incomparable.
Permutation perm_of_points(int m, const std::function<Comparison(int, int)>& prec);

// Perm({U_0..U_{n-1}}, <, prec), evaluated literally: for each pair the
// separating index is a range minimum over the sorted points. O(n^2).
Permutation lambda_reference(const OrderStream& st, int n);

// Rank insertion: U_j lands right after its predecessor among U_0..U_{j-1}
// and the pair is inflated with sign S_j. O(n log n).
Permutation lambda_fast(const OrderStream& st, int n);

// Ranks R_j in {1..j} of U_j among U_0..U_{j-1}, j = 1..n-1.
std::vector<int> insertion_ranks(const OrderStream& st, int n);

// Applies the recursion lambda_{j+1} = inflate_at_position(lambda_j, R_j, S_j).
// O(n^2).
Permutation lambda_from_ranks(const std::vector<int>& ranks, const std::vector<Sign>& signs);

// Draws lambda_n: fresh stream of length n-1, then rank insertion.
Permutation sample_lambda(const ChainConfig& cfg);
Permutation sample_lambda(int n, double p, Rng& rng);

}  // namespace permlab
