#include "permlab/step_function.hpp"

#include <algorithm>
#include <cmath>

#include "permlab/errors.hpp"

namespace permlab {

StepFunction StepFunction::constant(double c) {
  StepFunction f;
  f.values = {c};
  return f;
}

int StepFunction::cell_of(double x) const {
  const int m = cells();
  if (right_closed) {
    // first break >= x, cell to its left
    auto it = std::lower_bound(breaks.begin() + 1, breaks.end(), x);
    int c = static_cast<int>(it - breaks.begin()) - 1;
    return std::clamp(c, 0, m - 1);
  }
  auto it = std::upper_bound(breaks.begin(), breaks.end(), x);
  int c = static_cast<int>(it - breaks.begin()) - 1;
  return std::clamp(c, 0, m - 1);
}

void StepFunction::validate() const {
  if (breaks.size() != values.size() + 1) throw PreconditionError("step function: size mismatch");
  if (breaks.front() != 0.0 || breaks.back() != 1.0)
    throw PreconditionError("step function: breaks must start at 0 and end at 1");
  for (std::size_t i = 1; i < breaks.size(); ++i)
    if (!(breaks[i] > breaks[i - 1])) throw PreconditionError("step function: breaks must increase");
}

double l1_distance(const StepFunction& f, const StepFunction& g) {
  std::vector<double> b;
  b.reserve(f.breaks.size() + g.breaks.size());
  std::merge(f.breaks.begin(), f.breaks.end(), g.breaks.begin(), g.breaks.end(),
             std::back_inserter(b));
  b.erase(std::unique(b.begin(), b.end()), b.end());
  // Walk both functions cell by cell; the cell index only moves forward.
  double acc = 0.0;
  std::size_t fi = 0, gi = 0;
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    const double lo = b[i], hi = b[i + 1];
    while (fi + 1 < f.values.size() && f.breaks[fi + 1] <= lo) ++fi;
    while (gi + 1 < g.values.size() && g.breaks[gi + 1] <= lo) ++gi;
    acc += std::abs(f.values[fi] - g.values[gi]) * (hi - lo);
  }
  return acc;
}

double pushforward_ks_to_uniform(const StepFunction& f) {
  // The pushforward of Leb is atomic: weight (b_{i+1}-b_i) at values[i].
  std::vector<std::pair<double, double>> atoms;
  atoms.reserve(f.values.size());
  for (std::size_t i = 0; i < f.values.size(); ++i)
    atoms.emplace_back(f.values[i], f.breaks[i + 1] - f.breaks[i]);
  std::sort(atoms.begin(), atoms.end());
  double cdf = 0.0, worst = 0.0;
  for (std::size_t i = 0; i < atoms.size();) {
    const double v = atoms[i].first;
    // just below the atom
    worst = std::max(worst, std::abs(cdf - std::clamp(v, 0.0, 1.0)));
    while (i < atoms.size() && atoms[i].first == v) cdf += atoms[i++].second;
    worst = std::max(worst, std::abs(cdf - std::clamp(v, 0.0, 1.0)));
  }
  return worst;
}

}  // namespace permlab
