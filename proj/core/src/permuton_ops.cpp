#include "permlab/permuton_ops.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "permlab/errors.hpp"
#include "permlab/io.hpp"

namespace permlab {

GridMeasure::GridMeasure(int k) : k_(k) {
  if (k < 1) throw PreconditionError("grid resolution must be >= 1");
  mass_.assign(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0.0);
}

double GridMeasure::total() const { return std::accumulate(mass_.begin(), mass_.end(), 0.0); }

std::vector<double> GridMeasure::row_sums() const {
  std::vector<double> r(static_cast<std::size_t>(k_), 0.0);
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) r[static_cast<std::size_t>(i)] += at(i, j);
  return r;
}

std::vector<double> GridMeasure::col_sums() const {
  std::vector<double> c(static_cast<std::size_t>(k_), 0.0);
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) c[static_cast<std::size_t>(j)] += at(i, j);
  return c;
}

namespace {

// Fractions of [a, b] falling in each of the k cells; a degenerate interval
// goes wholly to the cell whose closed upper edge contains it.
std::vector<std::pair<int, double>> spread(double a, double b, int k) {
  std::vector<std::pair<int, double>> out;
  if (b < a) std::swap(a, b);
  if (b - a <= 0.0) {
    int c = static_cast<int>(std::ceil(a * k)) - 1;
    out.emplace_back(std::clamp(c, 0, k - 1), 1.0);
    return out;
  }
  const int lo = std::clamp(static_cast<int>(std::floor(a * k)), 0, k - 1);
  const int hi = std::clamp(static_cast<int>(std::ceil(b * k)) - 1, 0, k - 1);
  for (int c = lo; c <= hi; ++c) {
    const double l = std::max(a, static_cast<double>(c) / k);
    const double r = std::min(b, static_cast<double>(c + 1) / k);
    if (r > l) out.emplace_back(c, (r - l) / (b - a));
  }
  return out;
}

}  // namespace

void GridMeasure::add_uniform_rect(double x0, double x1, double y0, double y1, double weight) {
  const auto xs = spread(x0, x1, k_);
  const auto ys = spread(y0, y1, k_);
  for (auto [i, fx] : xs)
    for (auto [j, fy] : ys) at(i, j) += weight * fx * fy;
}

GridMeasure& GridMeasure::operator+=(const GridMeasure& o) {
  if (o.k_ != k_) throw PreconditionError("grid resolution mismatch");
  for (std::size_t i = 0; i < mass_.size(); ++i) mass_[i] += o.mass_[i];
  return *this;
}

GridMeasure& GridMeasure::operator*=(double c) {
  for (double& m : mass_) m *= c;
  return *this;
}

double GridMeasure::marginal_defect() const {
  double worst = 0.0;
  const double target = 1.0 / k_;
  for (double r : row_sums()) worst = std::max(worst, std::abs(r - target));
  for (double c : col_sums()) worst = std::max(worst, std::abs(c - target));
  return worst;
}

void GridMeasure::write_csv(std::ostream& os) const {
  os << k_ << ',' << fmt_double(total()) << '\n';
  for (int i = 0; i < k_; ++i) {
    for (int j = 0; j < k_; ++j) {
      if (j) os << ',';
      os << fmt_double(at(i, j));
    }
    os << '\n';
  }
}

GridMeasure GridMeasure::read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw PreconditionError("grid csv: missing header");
  const int k = std::stoi(line.substr(0, line.find(',')));
  GridMeasure g(k);
  for (int i = 0; i < k; ++i) {
    if (!std::getline(is, line)) throw PreconditionError("grid csv: missing row");
    std::istringstream row(line);
    std::string cell;
    for (int j = 0; j < k; ++j) {
      if (!std::getline(row, cell, ',')) throw PreconditionError("grid csv: short row");
      g.at(i, j) = std::stod(cell);
    }
  }
  return g;
}

GridMeasure permuton_of_perm(const Permutation& pi, int k) {
  GridMeasure g(k);
  const int n = pi.size();
  const double w = 1.0 / n;
  for (int i = 1; i <= n; ++i)
    g.add_uniform_rect(static_cast<double>(i - 1) / n, static_cast<double>(i) / n,
                       static_cast<double>(pi(i) - 1) / n, static_cast<double>(pi(i)) / n, w);
  return g;
}

GridMeasure segment_grid(const Permutation& pi, int k) {
  GridMeasure g(k);
  const int n = pi.size();
  const double w = 1.0 / n;
  for (int i = 1; i <= n; ++i) {
    // row of the cell whose closed top edge holds pi(i)/n, in integers
    const long long num = static_cast<long long>(pi(i)) * k;
    const int row = static_cast<int>((num + n - 1) / n) - 1;
    for (auto [c, fx] : spread(static_cast<double>(i - 1) / n, static_cast<double>(i) / n, k))
      g.at(c, row) += w * fx;
  }
  return g;
}

StepFunction f_of_perm(const Permutation& pi) {
  const int n = pi.size();
  StepFunction f;
  f.breaks.resize(static_cast<std::size_t>(n) + 1);
  f.values.resize(static_cast<std::size_t>(n));
  for (int i = 0; i <= n; ++i) f.breaks[static_cast<std::size_t>(i)] = static_cast<double>(i) / n;
  for (int i = 1; i <= n; ++i) f.values[static_cast<std::size_t>(i - 1)] = static_cast<double>(pi(i)) / n;
  f.right_closed = true;
  f.zero_at_origin = true;
  return f;
}

GridMeasure compose(const GridMeasure& mu0, const GridMeasure& mu1, double u, Sign s, int k_out) {
  if (!(u > 0.0 && u < 1.0)) throw PreconditionError("compose: u must lie in (0,1)");
  GridMeasure out(k_out);
  const double v = 1.0 - u;
  const double k0 = mu0.k(), k1 = mu1.k();
  for (int i = 0; i < mu0.k(); ++i)
    for (int j = 0; j < mu0.k(); ++j) {
      const double m = mu0.at(i, j);
      if (m == 0.0) continue;
      const double y_shift = s == Sign::Plus ? 0.0 : v;
      out.add_uniform_rect(u * i / k0, u * (i + 1) / k0, y_shift + u * j / k0,
                           y_shift + u * (j + 1) / k0, m * u);
    }
  for (int i = 0; i < mu1.k(); ++i)
    for (int j = 0; j < mu1.k(); ++j) {
      const double m = mu1.at(i, j);
      if (m == 0.0) continue;
      const double y_shift = s == Sign::Plus ? u : 0.0;
      out.add_uniform_rect(u + v * i / k1, u + v * (i + 1) / k1, y_shift + v * j / k1,
                           y_shift + v * (j + 1) / k1, m * v);
    }
  return out;
}

Permutation points_to_pattern(std::vector<std::pair<double, double>>& pts) {
  const std::size_t k = pts.size();
  if (k == 0) throw PreconditionError("pattern of an empty point set");
  std::sort(pts.begin(), pts.end());
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return pts[static_cast<std::size_t>(a)].second < pts[static_cast<std::size_t>(b)].second; });
  std::vector<int> tau(k);
  for (std::size_t r = 0; r < k; ++r) tau[static_cast<std::size_t>(order[r])] = static_cast<int>(r) + 1;
  return make_unchecked(std::move(tau));
}

GridSampler::GridSampler(const GridMeasure& mu) : k_(mu.k()), cdf_(mu.mass().size()) {
  double acc = 0.0;
  for (std::size_t c = 0; c < cdf_.size(); ++c) {
    if (mu.mass()[c] < 0.0) throw PreconditionError("grid sampler: negative mass");
    acc += mu.mass()[c];
    cdf_[c] = acc;
  }
  if (!(acc > 0.0)) throw PreconditionError("grid sampler: zero total mass");
}

std::pair<double, double> GridSampler::draw(Rng& rng) const {
  const double t = rng.uniform01() * cdf_.back();
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), t);
  if (it == cdf_.end()) --it;
  const auto c = static_cast<std::size_t>(it - cdf_.begin());
  const int i = static_cast<int>(c / static_cast<std::size_t>(k_));
  const int j = static_cast<int>(c % static_cast<std::size_t>(k_));
  return {(i + rng.uniform01()) / k_, (j + rng.uniform01()) / k_};
}

Permutation sample_pattern(const GridSampler& sampler, int k, Rng& rng) {
  if (k < 1) throw PreconditionError("pattern size must be >= 1");
  std::vector<std::pair<double, double>> pts(static_cast<std::size_t>(k));
  for (auto& pt : pts) pt = sampler.draw(rng);
  return points_to_pattern(pts);
}

Permutation sample_pattern(const GridMeasure& mu, int k, Rng& rng) {
  return sample_pattern(GridSampler(mu), k, rng);
}

Permutation sample_pattern(const StepFunction& f, int k, Rng& rng) {
  if (k < 1) throw PreconditionError("pattern size must be >= 1");
  struct Pt {
    double x, y, tie;
  };
  std::vector<Pt> pts(static_cast<std::size_t>(k));
  for (auto& pt : pts) {
    pt.x = rng.uniform01();
    pt.y = f(pt.x);
    pt.tie = rng.uniform01();
  }
  std::sort(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) { return a.x < b.x; });
  std::vector<int> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Pt& A = pts[static_cast<std::size_t>(a)];
    const Pt& B = pts[static_cast<std::size_t>(b)];
    return A.y != B.y ? A.y < B.y : A.tie < B.tie;
  });
  std::vector<int> tau(static_cast<std::size_t>(k));
  for (int r = 0; r < k; ++r) tau[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])] = r + 1;
  return make_unchecked(std::move(tau));
}

Permutation sample_pattern(const Permutation& pi, int k, Rng& rng) {
  if (k < 1) throw PreconditionError("pattern size must be >= 1");
  const int n = pi.size();
  std::vector<std::pair<double, double>> pts(static_cast<std::size_t>(k));
  for (auto& pt : pts) {
    const int i = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    pt.first = (i - 1 + rng.uniform01()) / n;
    pt.second = (pi(i) - 1 + rng.uniform01()) / n;
  }
  return points_to_pattern(pts);
}

}  // namespace permlab
