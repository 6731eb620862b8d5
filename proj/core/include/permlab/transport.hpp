#pragma once

#include "permlab/permuton_ops.hpp"

namespace permlab {

inline constexpr int kMaxTransportGrid = 64;

// Exact discrete optimal transport between two grids with the Euclidean
// distance between cell centres as ground cost. Masses are renormalised to
// the same total. Requires equal k <= 64. Solved by a transportation
// simplex (northwest-corner start, block pricing).
double w1_grid(const GridMeasure& mu, const GridMeasure& nu);

// 1D Wasserstein-1 between two equally sized samples (sorted matching).
double w1_samples(std::vector<double> a, std::vector<double> b);

}  // namespace permlab
