#include "permlab/brownian_baseline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "permlab/chain_sampler.hpp"
#include "permlab/decorated_tree.hpp"
#include "permlab/errors.hpp"
#include "permlab/parallel.hpp"
#include "permlab/permuton_ops.hpp"
#include "permlab/tree_density.hpp"

namespace permlab {

void DiscreteExcursion::validate() const {
  if (static_cast<int>(steps.size()) != 2 * m || static_cast<int>(height.size()) != 2 * m + 1)
    throw StructuralError("excursion: wrong length");
  if (height.front() != 0 || height.back() != 0) throw StructuralError("excursion: must start and end at 0");
  for (int t = 0; t < 2 * m; ++t) {
    if (steps[static_cast<std::size_t>(t)] != 1 && steps[static_cast<std::size_t>(t)] != -1)
      throw StructuralError("excursion: steps must be +-1");
    if (height[static_cast<std::size_t>(t) + 1] != height[static_cast<std::size_t>(t)] + steps[static_cast<std::size_t>(t)])
      throw StructuralError("excursion: heights do not match steps");
    if (height[static_cast<std::size_t>(t) + 1] < 0) throw StructuralError("excursion: negative height");
  }
  if (minima.size() != signs.size()) throw StructuralError("excursion: one sign per minimum");
  for (int v : minima)
    if (!is_local_min(v)) throw StructuralError("excursion: flagged vertex is not a strict local minimum");
}

bool DiscreteExcursion::is_local_min(int v) const {
  if (v <= 0 || v >= 2 * m) return false;
  const auto V = static_cast<std::size_t>(v);
  return height[V - 1] > height[V] && height[V + 1] > height[V];
}

Sign DiscreteExcursion::sign_at(int vertex) const {
  auto it = std::lower_bound(minima.begin(), minima.end(), vertex);
  if (it == minima.end() || *it != vertex) throw PreconditionError("vertex is not a local minimum");
  return signs[static_cast<std::size_t>(it - minima.begin())];
}

DiscreteExcursion sample_excursion(int m, double p, Rng& rng) {
  if (m < 1) throw PreconditionError("excursion length m must be >= 1");
  if (!(p > 0.0 && p < 1.0)) throw PreconditionError("p must lie strictly between 0 and 1");
  const int L = 2 * m + 1;
  std::vector<int> seq(static_cast<std::size_t>(L), -1);
  std::fill(seq.begin(), seq.begin() + m + 1, 1);
  for (int i = L - 1; i > 0; --i)
    std::swap(seq[static_cast<std::size_t>(i)], seq[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  // Start right after the last minimum of the prefix sums; every partial sum
  // of the rotation is then >= 1.
  int s = 0, best = 0, at = 0;
  for (int i = 0; i < L; ++i) {
    s += seq[static_cast<std::size_t>(i)];
    if (i < L - 1 && s <= best) {
      best = s;
      at = i + 1;
    }
  }
  DiscreteExcursion e;
  e.m = m;
  e.steps.reserve(static_cast<std::size_t>(2 * m));
  for (int r = 1; r < L; ++r) e.steps.push_back(seq[static_cast<std::size_t>((at + r) % L)]);
  e.height.assign(1, 0);
  for (int st : e.steps) e.height.push_back(e.height.back() + st);
  for (int v = 1; v < 2 * m; ++v)
    if (e.is_local_min(v)) {
      e.minima.push_back(v);
      e.signs.push_back(rng.bernoulli(p) ? Sign::Plus : Sign::Minus);
    }
  return e;
}

Comparison brownian_order(const DiscreteExcursion& e, int x, int y) {
  if (x < 0 || y < 0 || x > 2 * e.m || y > 2 * e.m) throw PreconditionError("vertex out of range");
  if (x == y) return Comparison::Incomparable;
  const int lo = std::min(x, y), hi = std::max(x, y);
  int arg = lo;
  for (int t = lo + 1; t <= hi; ++t)
    if (e.height[static_cast<std::size_t>(t)] < e.height[static_cast<std::size_t>(arg)]) arg = t;
  if (arg == lo || arg == hi) return Comparison::Incomparable;
  const bool forward = (y > x) == (e.sign_at(arg) == Sign::Plus);
  return forward ? Comparison::Before : Comparison::After;
}

Permutation brownian_permutation(const DiscreteExcursion& e) {
  // Valleys between consecutive peaks, in path order.
  std::vector<int> valleys;
  std::vector<Sign> vsign;
  int peaks = 0;
  for (int v = 1; v < 2 * e.m; ++v) {
    const auto V = static_cast<std::size_t>(v);
    if (e.height[V - 1] < e.height[V] && e.height[V + 1] < e.height[V]) ++peaks;
  }
  for (std::size_t i = 0; i < e.minima.size(); ++i) {
    valleys.push_back(e.minima[i]);
    vsign.push_back(e.signs[i]);
  }
  if (static_cast<int>(valleys.size()) != peaks - 1) throw StructuralError("excursion: peak/valley mismatch");
  const int q = static_cast<int>(valleys.size());
  if (q == 0) return Permutation::identity(1);

  // Cartesian tree on (height, position): the lowest valley, leftmost on ties,
  // decides between every pair of peaks it separates.
  auto key_less = [&](int a, int b) {
    const int ha = e.height[static_cast<std::size_t>(valleys[static_cast<std::size_t>(a)])];
    const int hb = e.height[static_cast<std::size_t>(valleys[static_cast<std::size_t>(b)])];
    return ha != hb ? ha < hb : a < b;
  };
  std::vector<int> lc(static_cast<std::size_t>(q), -1), rc(static_cast<std::size_t>(q), -1), stack;
  for (int i = 0; i < q; ++i) {
    int last = -1;
    while (!stack.empty() && key_less(i, stack.back())) {
      last = stack.back();
      stack.pop_back();
    }
    lc[static_cast<std::size_t>(i)] = last;
    if (!stack.empty()) rc[static_cast<std::size_t>(stack.back())] = i;
    stack.push_back(i);
  }
  const int root = stack.front();

  std::vector<int> rank(static_cast<std::size_t>(q));
  std::iota(rank.begin(), rank.end(), 0);
  std::sort(rank.begin(), rank.end(), key_less);
  std::vector<int> label(static_cast<std::size_t>(q));
  for (int r = 0; r < q; ++r) label[static_cast<std::size_t>(rank[static_cast<std::size_t>(r)])] = r + 1;

  // Valley i becomes tree node i; a missing child is the adjacent peak.
  DecoratedTree t;
  std::vector<int> node(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i)
    node[static_cast<std::size_t>(i)] =
        i == 0 ? 0 : t.add_leaf();
  for (int i = 0; i < q; ++i) {
    auto& nd = t.node(node[static_cast<std::size_t>(i)]);
    nd.sign = vsign[static_cast<std::size_t>(i)];
    nd.label = label[static_cast<std::size_t>(i)];
  }
  for (int i = 0; i < q; ++i) {
    const int l = lc[static_cast<std::size_t>(i)] >= 0 ? node[static_cast<std::size_t>(lc[static_cast<std::size_t>(i)])] : t.add_leaf();
    const int r = rc[static_cast<std::size_t>(i)] >= 0 ? node[static_cast<std::size_t>(rc[static_cast<std::size_t>(i)])] : t.add_leaf();
    auto& nd = t.node(node[static_cast<std::size_t>(i)]);
    nd.left = l;
    nd.right = r;
  }
  t.set_root(node[static_cast<std::size_t>(root)]);
  return perm_of_tree(t);
}

Estimate dn_statistic(Model model, double p, int n_perm, int k, int reps, std::uint64_t seed) {
  if (k < 2) throw PreconditionError("pattern size k must be >= 2");
  if (reps < 1) throw PreconditionError("reps must be >= 1");
  Rng rng(seed);
  const Permutation sigma = model == Model::Recursive
                                ? sample_chain_perm(n_perm, p, rng)
                                : brownian_permutation(sample_excursion(n_perm, p, rng));
  double s = 0.0, s2 = 0.0;
  for (int r = 0; r < reps; ++r) {
    const double d = static_cast<double>(descents(sample_pattern(sigma, k, rng))) / (k - 1);
    s += d;
    s2 += d * d;
  }
  Estimate est;
  est.value = s / reps;
  const double var = reps > 1 ? std::max(0.0, (s2 - s * s / reps) / (reps - 1)) : 0.0;
  est.stderr_ = std::sqrt(var / reps);
  return est;
}

bool corner_bl(const Permutation& sigma, double eps) {
  const int n = sigma.size();
  for (int i = 1; i <= n && static_cast<double>(i - 1) / n < eps; ++i)
    if (static_cast<double>(sigma(i) - 1) / n < eps) return true;
  return false;
}

bool corner_tl(const Permutation& sigma, double eps) {
  const int n = sigma.size();
  for (int i = 1; i <= n && static_cast<double>(i - 1) / n < eps; ++i)
    if (static_cast<double>(sigma(i)) / n > 1.0 - eps) return true;
  return false;
}

CornerFrequencies corner_events(Model model, double p, double eps, int n, int reps, std::uint64_t seed,
                                int threads) {
  if (!(eps > 0.0 && eps < 0.5)) throw PreconditionError("eps must lie in (0, 1/2)");
  if (reps < 1) throw PreconditionError("reps must be >= 1");
  std::vector<char> bl(static_cast<std::size_t>(reps)), tl(static_cast<std::size_t>(reps));
  parallel_for(reps, threads, [&](std::int64_t r) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(r));
    const Permutation sigma = model == Model::Recursive ? sample_chain_perm(n, p, rng)
                                                        : brownian_permutation(sample_excursion(n, p, rng));
    bl[static_cast<std::size_t>(r)] = corner_bl(sigma, eps);
    tl[static_cast<std::size_t>(r)] = corner_tl(sigma, eps);
  });
  CornerFrequencies f;
  f.reps = reps;
  for (int r = 0; r < reps; ++r) {
    f.bl += bl[static_cast<std::size_t>(r)];
    f.tl += tl[static_cast<std::size_t>(r)];
    f.both += bl[static_cast<std::size_t>(r)] && tl[static_cast<std::size_t>(r)];
  }
  f.bl /= reps;
  f.tl /= reps;
  f.both /= reps;
  return f;
}

}  // namespace permlab
