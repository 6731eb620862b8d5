#include "permlab/transport.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "permlab/errors.hpp"

namespace permlab {

namespace {

// Transportation simplex on the complete bipartite graph sources x sinks.
// Basic arcs form a spanning tree; potentials satisfy u_i + v_j = c_ij on it.
class TransportSimplex {
 public:
  TransportSimplex(std::vector<double> supply, std::vector<double> demand,
                   std::function<double(std::size_t, std::size_t)> cost)
      : S_(supply.size()), D_(demand.size()), cost_(std::move(cost)), adj_(S_ + D_) {
    northwest_corner(std::move(supply), std::move(demand));
  }

  double solve() {
    const std::size_t arcs = S_ * D_;
    const std::size_t block = std::max<std::size_t>(64, static_cast<std::size_t>(std::sqrt(static_cast<double>(arcs))));
    std::size_t cursor = 0;
    rebuild_tree();
    for (long pivots = 0;; ++pivots) {
      if (pivots > kMaxPivots) throw PreconditionError("w1_grid: simplex did not converge");
      // block search: most negative reduced cost within the first block that has one
      double best = -kTol;
      std::size_t enter = arcs, scanned = 0, in_block = 0;
      while (scanned < arcs) {
        const std::size_t i = cursor / D_, j = cursor % D_;
        const double r = cost_(i, j) - pot_[i] - pot_[S_ + j];
        if (r < best) {
          best = r;
          enter = cursor;
        }
        cursor = cursor + 1 == arcs ? 0 : cursor + 1;
        ++scanned;
        if (++in_block == block) {
          if (enter != arcs) break;
          in_block = 0;
        }
      }
      if (enter == arcs) break;
      pivot(enter / D_, enter % D_);
      rebuild_tree();
    }
    double total = 0.0;
    for (const Arc& a : arcs_) total += std::max(a.flow, 0.0) * cost_(a.src, a.dst);
    return total;
  }

 private:
  struct Arc {
    std::size_t src, dst;
    double flow;
  };
  static constexpr double kTol = 1e-12;
  static constexpr long kMaxPivots = 100000000;

  void add_arc(std::size_t i, std::size_t j, double f) {
    arcs_.push_back({i, j, f});
    adj_[i].push_back(arcs_.size() - 1);
    adj_[S_ + j].push_back(arcs_.size() - 1);
  }

  void northwest_corner(std::vector<double> s, std::vector<double> d) {
    std::size_t i = 0, j = 0;
    for (;;) {
      const double x = std::min(s[i], d[j]);
      add_arc(i, j, x);
      s[i] -= x;
      d[j] -= x;
      if (i + 1 == S_ && j + 1 == D_) break;
      if (i + 1 == S_) ++j;
      else if (j + 1 == D_) ++i;
      else if (s[i] <= d[j]) ++i;
      else ++j;
    }
  }

  std::size_t other(std::size_t arc, std::size_t node) const {
    const Arc& a = arcs_[arc];
    return node == a.src ? S_ + a.dst : a.src;
  }

  // Potentials, parent arcs and depths by a traversal from node 0.
  void rebuild_tree() {
    const std::size_t N = S_ + D_;
    pot_.assign(N, 0.0);
    parent_.assign(N, kNone);
    depth_.assign(N, -1);
    stack_.clear();
    stack_.push_back(0);
    depth_[0] = 0;
    while (!stack_.empty()) {
      const std::size_t u = stack_.back();
      stack_.pop_back();
      for (std::size_t e : adj_[u]) {
        const std::size_t v = other(e, u);
        if (depth_[v] >= 0) continue;
        depth_[v] = depth_[u] + 1;
        parent_[v] = e;
        const double c = cost_(arcs_[e].src, arcs_[e].dst);
        pot_[v] = c - pot_[u];
        stack_.push_back(v);
      }
    }
  }

  void pivot(std::size_t i, std::size_t j) {
    // Tree path from sink j back to source i; signs alternate starting with minus.
    std::vector<std::size_t>& up_j = path_a_;
    std::vector<std::size_t>& up_i = path_b_;
    up_j.clear();
    up_i.clear();
    std::size_t a = S_ + j, b = i;
    while (depth_[a] > depth_[b]) {
      up_j.push_back(parent_[a]);
      a = other(parent_[a], a);
    }
    while (depth_[b] > depth_[a]) {
      up_i.push_back(parent_[b]);
      b = other(parent_[b], b);
    }
    while (a != b) {
      up_j.push_back(parent_[a]);
      a = other(parent_[a], a);
      up_i.push_back(parent_[b]);
      b = other(parent_[b], b);
    }
    up_j.insert(up_j.end(), up_i.rbegin(), up_i.rend());

    double theta = std::numeric_limits<double>::infinity();
    std::size_t leave = kNone;
    for (std::size_t t = 0; t < up_j.size(); t += 2)
      if (arcs_[up_j[t]].flow < theta) {
        theta = arcs_[up_j[t]].flow;
        leave = up_j[t];
      }
    theta = std::max(theta, 0.0);
    for (std::size_t t = 0; t < up_j.size(); ++t) arcs_[up_j[t]].flow += (t % 2 == 0) ? -theta : theta;

    // The entering arc reuses the slot of the leaving one.
    auto unlink = [this, leave](std::size_t node) {
      auto& v = adj_[node];
      v.erase(std::find(v.begin(), v.end(), leave));
    };
    unlink(arcs_[leave].src);
    unlink(S_ + arcs_[leave].dst);
    arcs_[leave] = {i, j, theta};
    adj_[i].push_back(leave);
    adj_[S_ + j].push_back(leave);
  }

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::size_t S_, D_;
  std::function<double(std::size_t, std::size_t)> cost_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<double> pot_;
  std::vector<std::size_t> parent_;
  std::vector<int> depth_;
  std::vector<std::size_t> stack_, path_a_, path_b_;
};

}  // namespace

double w1_grid(const GridMeasure& mu, const GridMeasure& nu) {
  if (mu.k() != nu.k()) throw PreconditionError("w1_grid: resolution mismatch");
  const int k = mu.k();
  if (k > kMaxTransportGrid) throw SizeBoundError("w1_grid: k exceeds 64");
  const double tm = mu.total(), tn = nu.total();
  if (!(tm > 0.0) || !(tn > 0.0)) throw PreconditionError("w1_grid: empty measure");
  const double scale = tm / tn;

  // Mass shared by a cell in both measures stays put at zero cost.
  std::vector<int> src, dst;
  std::vector<double> supply, demand;
  for (int c = 0; c < k * k; ++c) {
    const double a = mu.mass()[static_cast<std::size_t>(c)];
    const double b = nu.mass()[static_cast<std::size_t>(c)] * scale;
    if (a > b) {
      src.push_back(c);
      supply.push_back(a - b);
    } else if (b > a) {
      dst.push_back(c);
      demand.push_back(b - a);
    }
  }
  if (src.empty() || dst.empty()) return 0.0;

  // distance between cell centres depends only on |di|, |dj|
  std::vector<double> table(static_cast<std::size_t>(k * k));
  for (int di = 0; di < k; ++di)
    for (int dj = 0; dj < k; ++dj) table[static_cast<std::size_t>(di * k + dj)] = std::hypot(di, dj) / k;
  auto cost = [&](std::size_t i, std::size_t j) {
    const int di = std::abs(src[i] / k - dst[j] / k), dj = std::abs(src[i] % k - dst[j] % k);
    return table[static_cast<std::size_t>(di * k + dj)];
  };
  return TransportSimplex(std::move(supply), std::move(demand), cost).solve();
}

double w1_samples(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size() || a.empty()) throw PreconditionError("w1_samples: sizes differ or empty");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::abs(a[i] - b[i]);
  return acc / static_cast<double>(a.size());
}

}  // namespace permlab
