#include "permlab/order_construction.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <unordered_set>

#include "linked_perm.hpp"
#include "permlab/errors.hpp"
#include "permlab/io.hpp"

namespace permlab {

OrderStream::OrderStream(std::vector<double> u, std::vector<Sign> s)
    : u_(std::move(u)), s_(std::move(s)) {
  if (u_.size() != s_.size()) throw PreconditionError("stream: u and s lengths differ");
  std::unordered_set<double> seen;
  for (double x : u_) {
    if (!(x > 0.0 && x < 1.0)) throw PreconditionError("stream: U values must lie in (0,1)");
    if (!seen.insert(x).second) throw PreconditionError("stream: U values must be distinct");
  }
}

OrderStream OrderStream::generate(int k, double p, Rng& rng) {
  if (k < 0) throw PreconditionError("stream length must be >= 0");
  OrderStream st;
  st.u_.reserve(static_cast<std::size_t>(k));
  st.s_.reserve(static_cast<std::size_t>(k));
  std::unordered_set<double> seen;
  seen.reserve(static_cast<std::size_t>(k) * 2);
  for (int j = 0; j < k; ++j) {
    double u = rng.uniform01();
    while (!seen.insert(u).second) u = rng.uniform01();
    st.u_.push_back(u);
    st.s_.push_back(rng.bernoulli(p) ? Sign::Plus : Sign::Minus);
  }
  return st;
}

double OrderStream::U(int j) const {
  if (j == -1) return 1.0;
  if (j == 0) return 0.0;
  return u_[static_cast<std::size_t>(j - 1)];
}

void OrderStream::write_csv(std::ostream& os) const {
  os << "j,U,S\n";
  for (int j = 1; j <= length(); ++j) os << j << ',' << fmt_double(U(j)) << ',' << sign_char(S(j)) << '\n';
}

int first_separating_index(const OrderStream& st, double x, double y, int depth) {
  if (depth < 0 || depth > st.length()) depth = st.length();
  const double lo = std::min(x, y), hi = std::max(x, y);
  if (lo == hi) return 0;
  const auto& u = st.u();
  for (int j = 0; j < depth; ++j) {
    const double v = u[static_cast<std::size_t>(j)];
    if (v > lo && v <= hi) return j + 1;
  }
  return 0;
}

Comparison precedes(const OrderStream& st, double x, double y, int depth) {
  const int j = first_separating_index(st, x, y, depth);
  if (j == 0) return Comparison::Incomparable;
  const bool forward = (y > x) == (st.S(j) == Sign::Plus);
  return forward ? Comparison::Before : Comparison::After;
}

double phi_k_at(const OrderStream& st, int k, double x) {
  if (k < 0 || k > st.length()) throw PreconditionError("phi_k: depth exceeds stream length");
  double L = 0.0, R = 1.0, acc = 0.0;
  for (int j = 1; j <= k; ++j) {
    const double u = st.U(j);
    if (u > L && u <= x) {
      if (st.S(j) == Sign::Plus) acc += u - L;
      L = u;
    } else if (u > x && u < R) {
      if (st.S(j) == Sign::Minus) acc += R - u;
      R = u;
    }
  }
  return acc;
}

double phi_k_literal(const OrderStream& st, int k, double x) {
  if (k < 0 || k > st.length()) throw PreconditionError("phi_k: depth exceeds stream length");
  std::vector<double> pts{0.0, 1.0, x};
  for (int j = 1; j <= k; ++j) pts.push_back(st.U(j));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double y = 0.5 * (pts[i] + pts[i + 1]);
    if (precedes(st, y, x, k) == Comparison::Before) acc += pts[i + 1] - pts[i];
  }
  return acc;
}

StepFunction phi_k(const OrderStream& st, int k) {
  if (k < 0 || k > st.length()) throw PreconditionError("phi_k: depth exceeds stream length");
  std::vector<double> left{0.0};
  for (int j = 1; j <= k; ++j) left.push_back(st.U(j));
  std::sort(left.begin(), left.end());
  // Cells are ordered by their left endpoints under the random order, which
  // is exactly lambda_{k+1}.
  const Permutation lam = lambda_fast(st, k + 1);
  const int m = k + 1;
  std::vector<double> len(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    len[static_cast<std::size_t>(i)] = (i + 1 < m ? left[static_cast<std::size_t>(i) + 1] : 1.0) - left[static_cast<std::size_t>(i)];
  const Permutation inv = lam.inverse();
  std::vector<double> below(static_cast<std::size_t>(m) + 1, 0.0);
  for (int r = 1; r <= m; ++r)
    below[static_cast<std::size_t>(r)] = below[static_cast<std::size_t>(r - 1)] + len[static_cast<std::size_t>(inv(r) - 1)];
  StepFunction f;
  f.breaks = left;
  f.breaks.push_back(1.0);
  f.values.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) f.values[static_cast<std::size_t>(i)] = below[static_cast<std::size_t>(lam(i + 1) - 1)];
  return f;
}

std::pair<double, double> sample_phi_point(double p, int K, Rng& rng) {
  const double x = rng.uniform01();
  double L = 0.0, R = 1.0, acc = 0.0;
  double j = 0.0;
  for (;;) {
    const double w = R - L;
    // trials until the next pair lands in (L, R)
    const double g = w >= 1.0 ? 1.0 : 1.0 + std::floor(std::log(rng.uniform01()) / std::log1p(-w));
    j += g;
    if (j > static_cast<double>(K)) break;
    const double u = L + w * rng.uniform01();
    const bool plus = rng.bernoulli(p);
    if (u <= x) {
      if (plus) acc += u - L;
      L = u;
    } else {
      if (!plus) acc += R - u;
      R = u;
    }
  }
  return {x, acc};
}

double max_gap(const OrderStream& st, int k) {
  if (k < 0 || k > st.length()) throw PreconditionError("max_gap: depth exceeds stream length");
  std::vector<double> pts{0.0, 1.0};
  for (int j = 1; j <= k; ++j) pts.push_back(st.U(j));
  std::sort(pts.begin(), pts.end());
  double g = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) g = std::max(g, pts[i] - pts[i - 1]);
  return g;
}

double empirical_prec_mass(const OrderStream& st, int n, double x) {
  if (n < 1 || n - 1 > st.length()) throw PreconditionError("empirical_prec_mass: bad n");
  int c = 0;
  for (int j = 0; j < n; ++j)
    if (precedes(st, st.U(j), x) == Comparison::Before) ++c;
  return static_cast<double>(c) / n;
}

Permutation perm_of_points(int m, const std::function<Comparison(int, int)>& prec) {
  if (m < 1) throw PreconditionError("perm_of_points: empty point set");
  std::vector<int> v(static_cast<std::size_t>(m), 1);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const Comparison c = prec(a, b);
      if (c == Comparison::Incomparable)
        throw IncomparablePairError("points " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                                    " are incomparable");
      ++v[static_cast<std::size_t>(c == Comparison::Before ? b : a)];
    }
  try {
    return Permutation(std::move(v));
  } catch (const PreconditionError&) {
    throw StructuralError("perm_of_points: relation is not a strict total order");
  }
}

Permutation lambda_reference(const OrderStream& st, int n) {
  if (n < 1 || n - 1 > st.length()) throw PreconditionError("lambda: n exceeds stream length + 1");
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return st.U(a) < st.U(b); });
  std::vector<int> v(static_cast<std::size_t>(n), 1);
  for (int a = 0; a < n; ++a) {
    // b > a: separating index is the minimum stream index in (x_a, x_b]
    int run = n;
    for (int b = a + 1; b < n; ++b) {
      run = std::min(run, idx[static_cast<std::size_t>(b)]);
      if (st.S(run) == Sign::Minus) ++v[static_cast<std::size_t>(a)];  // x_b precedes x_a
    }
    run = n;
    for (int b = a - 1; b >= 0; --b) {
      run = std::min(run, idx[static_cast<std::size_t>(b) + 1]);
      if (st.S(run) == Sign::Plus) ++v[static_cast<std::size_t>(a)];  // x_b precedes x_a
    }
  }
  return make_unchecked(std::move(v));
}

Permutation lambda_fast(const OrderStream& st, int n) {
  if (n < 1 || n - 1 > st.length()) throw PreconditionError("lambda: n exceeds stream length + 1");
  detail::LinkedPerm lp(n);
  std::map<double, int> by_u{{0.0, 0}};
  for (int j = 1; j < n; ++j) {
    const double u = st.U(j);
    auto it = by_u.lower_bound(u);
    const int pred = std::prev(it)->second;
    lp.inflate(pred, j, st.S(j));
    by_u.emplace_hint(it, u, j);
  }
  return lp.read(n);
}

std::vector<int> insertion_ranks(const OrderStream& st, int n) {
  if (n < 1 || n - 1 > st.length()) throw PreconditionError("ranks: n exceeds stream length + 1");
  std::vector<int> r;
  for (int j = 1; j < n; ++j) {
    int c = 0;
    for (int i = 0; i < j; ++i) c += st.U(i) < st.U(j);
    r.push_back(c);
  }
  return r;
}

Permutation lambda_from_ranks(const std::vector<int>& ranks, const std::vector<Sign>& signs) {
  if (signs.size() < ranks.size()) throw PreconditionError("lambda_from_ranks: too few signs");
  Permutation lam = Permutation::identity(1);
  for (std::size_t j = 0; j < ranks.size(); ++j) lam = inflate_at_position(lam, ranks[j], signs[j]);
  return lam;
}

Permutation sample_lambda(int n, double p, Rng& rng) {
  ChainConfig{p, 0, n}.validate();
  const OrderStream st = OrderStream::generate(n - 1, p, rng);
  return lambda_fast(st, n);
}

Permutation sample_lambda(const ChainConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  return sample_lambda(cfg.n_target, cfg.p, rng);
}

}  // namespace permlab
