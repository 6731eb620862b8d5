#include "permlab/intensity.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/beta.hpp>

#include "permlab/chain_sampler.hpp"
#include "permlab/errors.hpp"
#include "permlab/order_construction.hpp"
#include "permlab/parallel.hpp"

#include "adaptive_quadrature.hpp"

namespace permlab {

namespace bq = boost::math::quadrature;

void BetaParams::validate() const {
  if (!(a > 0.0 && b > 0.0)) throw PreconditionError("beta parameters must be positive");
}

namespace {

double sample_gamma(double shape, Rng& rng) {
  std::gamma_distribution<double> g(shape, 1.0);
  return g(rng);
}

void check_open_p(double p) {
  if (!(p > 0.0 && p < 1.0)) throw PreconditionError("p must lie strictly between 0 and 1");
}

constexpr std::int64_t kChunk = 4096;

}  // namespace

double sample_beta(const BetaParams& params, Rng& rng) {
  params.validate();
  for (;;) {
    const double x = sample_gamma(params.a, rng);
    const double y = sample_gamma(params.b, rng);
    const double s = x + y;
    if (s > 0.0) return x / s;
  }
}

std::vector<double> psi_iterate(const std::vector<double>& nu, double p, Rng& rng) {
  check_open_p(p);
  std::vector<double> out(nu.size());
  for (std::size_t i = 0; i < nu.size(); ++i) {
    const double b = rng.bernoulli(p) ? 1.0 : 0.0;
    const double v = rng.uniform01();
    out[i] = b * v + (1.0 - v) * nu[i];
  }
  return out;
}

std::pair<double, double> sample_intensity(double p, Rng& rng) {
  check_open_p(p);
  const double u = rng.uniform01();
  const double x = sample_beta({p, 1.0 - p}, rng);
  const double xp = sample_beta({1.0 - p, p}, rng);
  return {u, u * x + (1.0 - u) * xp};
}

namespace {

struct Piece {
  double value = 0.0;
  double error = 0.0;
  void operator+=(const Piece& o) {
    value += o.value;
    error += o.error;
  }
};

template <class F>
Piece gk(F f, double a, double b, double tol) {
  const auto r = detail::adaptive_gk<31>(f, a, b, tol);
  return {r.value, r.error};
}

// Integral over w in [0, W] of w^(al-1) (w+eps)^(al-1) F(w). al in (0,1).
// [0, min(eps,W)] is mapped by w = t^(1/al), which absorbs w^(al-1); the rest
// by w = e^s, on which the integrand is smooth. eps = 0 collapses the two
// factors into w^(2al-2), needing al > 1/2.
template <class F>
Piece endpoint_integral(double al, double eps, double W, F F_, double tol) {
  Piece out;
  if (!(W > 0.0)) return out;
  if (eps == 0.0) {
    const double be = 2.0 * al - 1.0;
    auto g = [&](double t) { return F_(std::pow(t, 1.0 / be)) / be; };
    return gk(g, 0.0, std::pow(W, be), tol);
  }
  const double c = std::min(eps, W);
  auto g1 = [&](double t) {
    const double w = std::pow(t, 1.0 / al);
    return std::pow(w + eps, al - 1.0) * F_(w) / al;
  };
  out += gk(g1, 0.0, std::pow(c, al), tol);
  if (W > eps) {
    auto g2 = [&](double s) {
      const double w = std::exp(s);
      return std::exp(s * al) * std::pow(w + eps, al - 1.0) * F_(w);
    };
    out += gk(g2, std::log(eps), std::log(W), tol);
  }
  return out;
}

}  // namespace

DensityValue intensity_density(double p, double x, double y, double tol) {
  check_open_p(p);
  if (!(x > 0.0 && x < 1.0 && y > 0.0 && y < 1.0))
    throw PreconditionError("density: (x,y) must lie in the open unit square");
  DensityValue out;
  // Distances to the two lines and the half width, each formed without
  // cancellation: with a = max(0, x+y-1) and b = min(x, y) the four factors of
  // the integrand at z = a + w are w, w + eps, D - w and D - w + delta.
  // a point counts as on x + y = 1 if either rounding puts it there
  const double eps = x + y == 1.0 ? 0.0 : std::abs(x - (1.0 - y));
  const double delta = std::abs(x - y);
  if ((delta == 0.0 && p >= 0.5) || (eps == 0.0 && p <= 0.5)) {
    out.value = std::numeric_limits<double>::infinity();
    out.divergent = true;
    return out;
  }
  const double D = std::min({x, y, 1.0 - x, 1.0 - y});
  const double half = 0.5 * D;
  // Near z = a the integrand is w^(p-1) (w+eps)^(p-1) times this.
  auto lower_rest = [&](double w) { return std::pow((D - w) * (D - w + delta), -p); };
  // Near z = b it is v^(-p) (v+delta)^(-p) times this.
  auto upper_rest = [&](double v) { return std::pow((D - v) * (D - v + eps), p - 1.0); };
  Piece lo = endpoint_integral(p, eps, half, lower_rest, tol);
  Piece hi = endpoint_integral(1.0 - p, delta, half, upper_rest, tol);
  const double g = std::tgamma(p) * std::tgamma(1.0 - p);
  const double C = 1.0 / (g * g);
  out.value = C * (lo.value + hi.value);
  out.error = C * (lo.error + hi.error);
  if (!std::isfinite(out.value) || out.error > 1e3 * tol * std::abs(out.value) + 1e-300)
    throw QuadratureError("density quadrature did not converge", out.value, out.error);
  return out;
}

double density_marginal(double p, double x, double tol) {
  check_open_p(p);
  std::vector<double> cuts{0.0, 1.0, x, 1.0 - x};
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  bq::tanh_sinh<double> ts;
  auto f = [&](double y) {
    if (!(y > 0.0 && y < 1.0)) return 0.0;
    const auto d = intensity_density(p, x, y, 1e-11);
    return d.divergent ? 0.0 : d.value;
  };
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) acc += ts.integrate(f, cuts[i], cuts[i + 1], tol);
  return acc;
}

bool is_singular_cell(double p, int k, int i, int j) {
  if (p >= 0.5 && std::abs(i - j) <= 1) return true;
  if (p <= 0.5 && i + j >= k - 2 && i + j <= k) return true;
  return false;
}

ClosedFormGrid closed_form_grid(double p, int k, std::int64_t mc_per_row, std::uint64_t seed,
                                int threads) {
  check_open_p(p);
  if (k < 1) throw PreconditionError("grid resolution must be >= 1");
  if (mc_per_row < 1) throw PreconditionError("mc_per_row must be >= 1");
  ClosedFormGrid out{GridMeasure(k), std::vector<char>(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0)};
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) out.singular[static_cast<std::size_t>(i * k + j)] = is_singular_cell(p, k, i, j);

  const double h = 1.0 / k;
  parallel_for(static_cast<std::int64_t>(k) * k, threads, [&](std::int64_t c) {
    const int i = static_cast<int>(c / k), j = static_cast<int>(c % k);
    if (out.singular[static_cast<std::size_t>(c)]) return;
    const double x0 = i * h, y0 = j * h;
    auto inner = [&](double x) {
      auto fy = [&](double y) { return intensity_density(p, x, y, 1e-9).value; };
      // the density has a cusp where a line crosses the cell; cut there
      double cuts[4] = {y0, std::min(x, 1.0 - x), std::max(x, 1.0 - x), y0 + h};
      double acc = 0.0, lo = y0;
      for (int c = 1; c < 4; ++c) {
        const double hi = std::clamp(cuts[c], lo, y0 + h);
        if (hi > lo) acc += detail::adaptive_gk<15>(fy, lo, hi, 1e-7).value;
        lo = hi;
      }
      return acc;
    };
    out.mass.at(i, j) = detail::adaptive_gk<15>(inner, x0, x0 + h, 1e-7).value;
  });

  // Singular cells: U stratified inside the row, X drawn, X' integrated out
  // exactly through its Beta(1-p, p) distribution function.
  parallel_for(k, threads, [&](std::int64_t ii) {
    const int i = static_cast<int>(ii);
    std::vector<int> cols;
    for (int j = 0; j < k; ++j)
      if (out.singular[static_cast<std::size_t>(i * k + j)]) cols.push_back(j);
    if (cols.empty()) return;
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(i));
    std::vector<double> acc(cols.size(), 0.0);
    auto cdf = [&](double t) {
      if (t <= 0.0) return 0.0;
      if (t >= 1.0) return 1.0;
      return boost::math::ibeta(1.0 - p, p, t);
    };
    for (std::int64_t s = 0; s < mc_per_row; ++s) {
      const double u = (i + (static_cast<double>(s) + rng.uniform01()) / static_cast<double>(mc_per_row)) * h;
      const double xb = sample_beta({p, 1.0 - p}, rng);
      // Y = u xb + (1-u) X' lies in [y0, y1] iff X' in [(y0 - u xb)/(1-u), (y1 - u xb)/(1-u)]
      for (std::size_t c = 0; c < cols.size(); ++c) {
        const double y0 = cols[c] * h, y1 = y0 + h;
        acc[c] += cdf((y1 - u * xb) / (1.0 - u)) - cdf((y0 - u * xb) / (1.0 - u));
      }
    }
    for (std::size_t c = 0; c < cols.size(); ++c)
      out.mass.at(i, cols[c]) = h * acc[c] / static_cast<double>(mc_per_row);
  });
  return out;
}

namespace {

template <class Draw>
GridMeasure histogram(int k, std::int64_t draws, std::uint64_t seed, int threads, Draw draw) {
  if (k < 1) throw PreconditionError("grid resolution must be >= 1");
  if (draws < 1) throw PreconditionError("draws must be >= 1");
  const std::int64_t chunks = (draws + kChunk - 1) / kChunk;
  GridMeasure g = chunked_reduce<GridMeasure>(
      chunks, 1, threads, [k] { return GridMeasure(k); },
      [&](GridMeasure& part, std::int64_t c) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(c));
        const std::int64_t lo = c * kChunk, hi = std::min(draws, lo + kChunk);
        for (std::int64_t s = lo; s < hi; ++s) {
          const auto [x, y] = draw(rng);
          const int i = std::clamp(static_cast<int>(x * k), 0, k - 1);
          const int j = std::clamp(static_cast<int>(y * k), 0, k - 1);
          part.at(i, j) += 1.0;
        }
      },
      [](GridMeasure& into, const GridMeasure& part) { into += part; });
  g *= 1.0 / static_cast<double>(draws);
  return g;
}

}  // namespace

GridMeasure sampled_intensity_grid(double p, int k, std::int64_t draws, std::uint64_t seed, int threads) {
  check_open_p(p);
  return histogram(k, draws, seed, threads, [p](Rng& rng) { return sample_intensity(p, rng); });
}

GridMeasure phi_intensity_grid(double p, int K, int k, std::int64_t draws, std::uint64_t seed,
                               int threads) {
  check_open_p(p);
  if (K < 0) throw PreconditionError("depth must be >= 0");
  return histogram(k, draws, seed, threads, [p, K](Rng& rng) { return sample_phi_point(p, K, rng); });
}

GridMeasure empirical_intensity_grid(int n, std::int64_t N, double p, int k, std::uint64_t seed,
                                     int threads) {
  ChainConfig{p, seed, n}.validate();
  if (N < 1) throw PreconditionError("N must be >= 1");
  GridMeasure g = chunked_reduce<GridMeasure>(
      N, 64, threads, [k] { return GridMeasure(k); },
      [&](GridMeasure& part, std::int64_t s) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(s));
        part += permuton_of_perm(sample_chain_perm(n, p, rng), k);
      },
      [](GridMeasure& into, const GridMeasure& part) { into += part; });
  g *= 1.0 / static_cast<double>(N);
  return g;
}

double diagonal_ratio(const GridMeasure& g) {
  double d = 0.0, a = 0.0;
  const int k = g.k();
  for (int i = 0; i < k; ++i) {
    d += g.at(i, i);
    a += g.at(i, k - 1 - i);
  }
  return a > 0.0 ? d / a : std::numeric_limits<double>::infinity();
}

double l1_cells(const GridMeasure& a, const GridMeasure& b) {
  if (a.k() != b.k()) throw PreconditionError("grid resolution mismatch");
  double s = 0.0;
  for (std::size_t c = 0; c < a.mass().size(); ++c) s += std::abs(a.mass()[c] - b.mass()[c]);
  return s;
}

}  // namespace permlab
