#pragma once

#include <cmath>
#include <queue>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace permlab::detail {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
};

// Globally adaptive Gauss-Kronrod: bisect the interval with the largest error
// until the summed estimate drops below tol * |value|. Boost supplies the
// rule; its own recursive driver is not used because in Boost 1.74 it
// compares an unscaled error with a scaled tolerance, which never terminates
// early on short intervals.
template <unsigned N, class F>
QuadResult adaptive_gk(F f, double a, double b, double tol, int max_intervals = 2000) {
  using Rule = boost::math::quadrature::gauss_kronrod<double, N>;
  struct Seg {
    double a, b, value, error;
    bool operator<(const Seg& o) const { return error < o.error; }
  };
  auto eval = [&](double lo, double hi) {
    double err = 0.0;
    const double v = Rule::integrate(f, lo, hi, 0, 0.0, &err);
    return Seg{lo, hi, v, err * 0.5 * (hi - lo)};
  };
  QuadResult out;
  if (!(b > a)) return out;
  std::priority_queue<Seg> heap;
  heap.push(eval(a, b));
  out.value = heap.top().value;
  out.error = heap.top().error;
  std::vector<Seg> frozen;
  int intervals = 1;
  while (!heap.empty() && out.error > tol * std::abs(out.value) && intervals < max_intervals) {
    const Seg s = heap.top();
    heap.pop();
    const double mid = 0.5 * (s.a + s.b);
    if (!(mid > s.a && mid < s.b)) {
      frozen.push_back(s);  // cannot be split further
      continue;
    }
    const Seg l = eval(s.a, mid), r = eval(mid, s.b);
    out.value += l.value + r.value - s.value;
    out.error += l.error + r.error - s.error;
    heap.push(l);
    heap.push(r);
    ++intervals;
  }
  // resum to drop the drift of the running totals
  out.value = 0.0;
  out.error = 0.0;
  for (; !heap.empty(); heap.pop()) {
    out.value += heap.top().value;
    out.error += heap.top().error;
  }
  for (const Seg& s : frozen) {
    out.value += s.value;
    out.error += s.error;
  }
  return out;
}

}  // namespace permlab::detail
