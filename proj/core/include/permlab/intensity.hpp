#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "permlab/permuton_ops.hpp"
#include "permlab/rng.hpp"

namespace permlab {

struct BetaParams {
  double a = 1.0;
  double b = 1.0;
  void validate() const;
};

// Two-Gamma construction G_a / (G_a + G_b).
double sample_beta(const BetaParams& params, Rng& rng);

// One application of Y = B V + (1 - V) X to every point, B ~ Bernoulli(p),
// V uniform, fresh per point.
std::vector<double> psi_iterate(const std::vector<double>& nu, double p, Rng& rng);

// (U, U X + (1-U) X') with X ~ Beta(p,1-p), X' ~ Beta(1-p,p).
std::pair<double, double> sample_intensity(double p, Rng& rng);

struct DensityValue {
  double value = 0.0;
  bool divergent = false;
  double error = 0.0;
};

// Density of the intensity measure at (x,y) in (0,1)^2. Divergent on x = y
// for p >= 1/2 and on x + y = 1 for p <= 1/2. Throws QuadratureError with the
// partial estimate if the requested relative tolerance is not met.
DensityValue intensity_density(double p, double x, double y, double tol = 1e-10);

// Integral over y in [0,1] of the density at fixed x.
double density_marginal(double p, double x, double tol = 1e-9);

// True when cell (i,j) of a k-grid touches a line where the density diverges
// for this p.
bool is_singular_cell(double p, int k, int i, int j);

struct ClosedFormGrid {
  GridMeasure mass;
  std::vector<char> singular;  // row-major flags, 1 = filled by Monte Carlo
};

// Cell masses of the density: nested adaptive quadrature on regular cells,
// stratified Monte Carlo on singular cells (row by row, conditioning U on the
// row). mc_per_row draws per row that contains singular cells.
ClosedFormGrid closed_form_grid(double p, int k, std::int64_t mc_per_row, std::uint64_t seed,
                                int threads = 1);

// Histogram of `draws` sample_intensity points.
GridMeasure sampled_intensity_grid(double p, int k, std::int64_t draws, std::uint64_t seed,
                                   int threads = 1);

// Histogram of `draws` points (U, phi_K(U)).
GridMeasure phi_intensity_grid(double p, int K, int k, std::int64_t draws, std::uint64_t seed,
                               int threads = 1);

// Average of N grids of independent chain permutations of size n.
GridMeasure empirical_intensity_grid(int n, std::int64_t N, double p, int k, std::uint64_t seed,
                                     int threads = 1);

// Mass on cells with i == j divided by mass on cells with i + j == k - 1.
double diagonal_ratio(const GridMeasure& g);

double l1_cells(const GridMeasure& a, const GridMeasure& b);

}  // namespace permlab
