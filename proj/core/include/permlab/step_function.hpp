#pragma once

#include <vector>

namespace permlab {

// Piecewise constant function on [0,1]. breaks = b_0 = 0 < b_1 < ... < b_m = 1
// and values[i] is the value on cell i. Cells are [b_i, b_{i+1}) with the last
// closed by default; right_closed flips this to (b_i, b_{i+1}] with the first
// cell closed.
struct StepFunction {
  std::vector<double> breaks{0.0, 1.0};
  std::vector<double> values{0.0};
  bool right_closed = false;
  // Forces f(0) = 0 regardless of the first cell's value.
  bool zero_at_origin = false;

  static StepFunction constant(double c);

  int cells() const { return static_cast<int>(values.size()); }
  int cell_of(double x) const;
  double operator()(double x) const {
    if (zero_at_origin && x <= 0.0) return 0.0;
    return values[static_cast<std::size_t>(cell_of(x))];
  }

  // Throws PreconditionError on malformed breakpoints.
  void validate() const;
};

// Exact integral of |f - g| over [0,1] using the merged breakpoints.
double l1_distance(const StepFunction& f, const StepFunction& g);

// sup_t |Leb{x : f(x) <= t} - t| for t in [0,1]; zero iff f pushes Leb to
// the uniform law.
double pushforward_ks_to_uniform(const StepFunction& f);

}  // namespace permlab
