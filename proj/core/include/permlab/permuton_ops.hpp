#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <vector>

#include "permlab/permutation.hpp"
#include "permlab/rng.hpp"
#include "permlab/step_function.hpp"
#include "permlab/types.hpp"

namespace permlab {

// k x k cell masses, row-major with the row index running over x: entry
// (i, j), 0-based, covers [i/k, (i+1)/k] x [j/k, (j+1)/k].
class GridMeasure {
 public:
  explicit GridMeasure(int k = 1);

  int k() const { return k_; }
  double& at(int i, int j) { return mass_[idx(i, j)]; }
  double at(int i, int j) const { return mass_[idx(i, j)]; }
  const std::vector<double>& mass() const { return mass_; }
  std::vector<double>& mass() { return mass_; }

  double total() const;
  std::vector<double> row_sums() const;  // x-marginal
  std::vector<double> col_sums() const;  // y-marginal

  // Spreads `weight` uniformly over [x0,x1] x [y0,y1], prorated by overlap.
  void add_uniform_rect(double x0, double x1, double y0, double y1, double weight);

  GridMeasure& operator+=(const GridMeasure& o);
  GridMeasure& operator*=(double c);

  // Largest deviation of a row or column sum from 1/k.
  double marginal_defect() const;

  // Header line "k,total", then k lines of k values (row = x cell).
  void write_csv(std::ostream& os) const;
  static GridMeasure read_csv(std::istream& is);

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(j);
  }
  int k_;
  std::vector<double> mass_;
};

// Grid of mu_pi: mass 1/n spread uniformly on each square
// [(i-1)/n, i/n] x [(pi(i)-1)/n, pi(i)/n].
GridMeasure permuton_of_perm(const Permutation& pi, int k);

// Grid of the pushforward of Leb by f_pi: horizontal segments at heights
// pi(i)/n, each carrying mass 1/n. A segment on a cell boundary goes to the
// cell below it.
GridMeasure segment_grid(const Permutation& pi, int k);

// f_pi(x) = pi(ceil(nx))/n with f_pi(0) = 0; right-closed cells.
StepFunction f_of_perm(const Permutation& pi);

// mu0 rescaled into the first block of width u and mu1 into the second;
// Plus stacks the blocks along the diagonal, Minus along the antidiagonal.
// Cell mass is treated as uniform inside each source cell.
GridMeasure compose(const GridMeasure& mu0, const GridMeasure& mu1, double u, Sign s, int k_out);

// Draws k i.i.d. points and returns tau with tau(i) = rank of the y
// coordinate of the point with the i-th smallest x.
Permutation points_to_pattern(std::vector<std::pair<double, double>>& pts);

// Cell sampler for a grid; points are uniform inside the chosen cell.
class GridSampler {
 public:
  explicit GridSampler(const GridMeasure& mu);
  std::pair<double, double> draw(Rng& rng) const;

 private:
  int k_;
  std::vector<double> cdf_;
};

Permutation sample_pattern(const GridMeasure& mu, int k, Rng& rng);
Permutation sample_pattern(const GridSampler& sampler, int k, Rng& rng);
// Points (U, f(U)); equal heights are ordered uniformly at random.
Permutation sample_pattern(const StepFunction& f, int k, Rng& rng);
// Points of mu_pi drawn directly, no grid.
Permutation sample_pattern(const Permutation& pi, int k, Rng& rng);

}  // namespace permlab
