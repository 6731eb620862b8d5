#include "permlab/tree_density.hpp"

#include <algorithm>
#include <vector>

#include "permlab/errors.hpp"

namespace permlab {

Permutation perm_of_tree(const DecoratedTree& t) {
  t.validate();
  // Preorder list: parents before children.
  std::vector<int> order;
  {
    std::vector<int> stack{t.root()};
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      order.push_back(i);
      const auto& nd = t.node(i);
      if (!nd.is_leaf()) {
        stack.push_back(nd.right);
        stack.push_back(nd.left);
      }
    }
  }
  const auto N = static_cast<std::size_t>(t.node_count());
  std::vector<int> leaves(N, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto& nd = t.node(*it);
    leaves[static_cast<std::size_t>(*it)] =
        nd.is_leaf() ? 1 : leaves[static_cast<std::size_t>(nd.left)] + leaves[static_cast<std::size_t>(nd.right)];
  }
  // Lowest value used by each subtree, assigned top-down.
  std::vector<int> base(N, 0);
  base[static_cast<std::size_t>(t.root())] = 1;
  std::vector<int> values;
  for (int i : order) {
    const auto& nd = t.node(i);
    const int b = base[static_cast<std::size_t>(i)];
    if (nd.is_leaf()) {
      values.push_back(b);  // preorder meets leaves left to right
      continue;
    }
    const int nl = leaves[static_cast<std::size_t>(nd.left)];
    const int nr = leaves[static_cast<std::size_t>(nd.right)];
    if (nd.sign == Sign::Plus) {
      base[static_cast<std::size_t>(nd.left)] = b;
      base[static_cast<std::size_t>(nd.right)] = b + nl;
    } else {
      base[static_cast<std::size_t>(nd.right)] = b;
      base[static_cast<std::size_t>(nd.left)] = b + nr;
    }
  }
  return make_unchecked(std::move(values));
}

Rational increasing_tree_weight(const Permutation& pi) {
  const int n = pi.size();
  const auto& v = pi.entries();
  auto at = [n](int i, int j) { return static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j); };
  std::vector<int> lo(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)), hi(lo.size());
  for (int i = 0; i < n; ++i) {
    int a = v[static_cast<std::size_t>(i)], b = a;
    for (int j = i; j < n; ++j) {
      a = std::min(a, v[static_cast<std::size_t>(j)]);
      b = std::max(b, v[static_cast<std::size_t>(j)]);
      lo[at(i, j)] = a;
      hi[at(i, j)] = b;
    }
  }
  auto contiguous = [&](int i, int j) { return hi[at(i, j)] - lo[at(i, j)] == j - i; };
  std::vector<Rational> W(lo.size(), Rational(0));
  for (int i = 0; i < n; ++i) W[at(i, i)] = 1;
  for (int len = 2; len <= n; ++len) {
    for (int i = 0; i + len - 1 < n; ++i) {
      const int j = i + len - 1;
      if (!contiguous(i, j)) continue;
      Rational acc = 0;
      for (int m = i; m < j; ++m) {
        if (!contiguous(i, m)) continue;
        const bool low = lo[at(i, m)] == lo[at(i, j)];
        const bool high = hi[at(i, m)] == hi[at(i, j)];
        if (!low && !high) continue;
        const Rational& a = W[at(i, m)];
        const Rational& b = W[at(m + 1, j)];
        if (a != 0 && b != 0) acc += a * b;
      }
      W[at(i, j)] = acc / (len - 1);
    }
  }
  return W[at(0, n - 1)];
}

BigInt count_inc_trees(const Permutation& pi) {
  const Rational w = increasing_tree_weight(pi) * Rational(factorial(pi.size() - 1));
  if (denominator(w) != 1) throw StructuralError("increasing tree count is not an integer");
  return numerator(w);
}

namespace {

void check_p(const Rational& p) {
  if (!(p > 0 && p < 1)) throw PreconditionError("p must lie strictly between 0 and 1");
}

}  // namespace

Rational exact_pattern_prob(const Permutation& pi, const Rational& p) {
  check_p(p);
  const Rational w = increasing_tree_weight(pi);
  if (w == 0) return 0;
  const int n = pi.size();
  const int d = descents(pi);
  return w * rpow(1 - p, d) * rpow(p, n - 1 - d);
}

ExactDist exact_distribution(int n, const Rational& p, int bound) {
  check_p(p);
  if (n < 1) throw PreconditionError("n must be >= 1");
  if (n > bound) throw SizeBoundError("exact_distribution: n exceeds bound " + std::to_string(bound));
  ExactDist d;
  d.n = n;
  for (const auto& pi : all_permutations(n)) {
    if (!is_separable(pi)) continue;
    Rational pr = exact_pattern_prob(pi, p);
    if (pr != 0) d.prob.emplace(pi, std::move(pr));
  }
  return d;
}

std::map<Permutation, Polynomial> exact_distribution_symbolic(int n, int bound) {
  if (n < 1) throw PreconditionError("n must be >= 1");
  if (n > bound) throw SizeBoundError("exact_distribution: n exceeds bound " + std::to_string(bound));
  std::map<Permutation, Polynomial> out;
  for (const auto& pi : all_permutations(n)) {
    if (!is_separable(pi)) continue;
    const Rational w = increasing_tree_weight(pi);
    if (w == 0) continue;
    const int d = descents(pi);
    out.emplace(pi, Polynomial(w) * Polynomial::one_minus_p().pow(d) * Polynomial::p().pow(n - 1 - d));
  }
  return out;
}

ExactLaw<int> descent_law(int n, const Rational& p) {
  check_p(p);
  if (n < 1) throw PreconditionError("n must be >= 1");
  ExactLaw<int> law;
  BigInt binom = 1;
  for (int d = 0; d <= n - 1; ++d) {
    law[d] = Rational(binom) * rpow(1 - p, d) * rpow(p, n - 1 - d);
    binom = binom * (n - 1 - d) / (d + 1);
  }
  return law;
}

ExactLaw<int> descent_marginal(const ExactDist& d) {
  ExactLaw<int> law;
  for (const auto& [pi, pr] : d.prob) law[descents(pi)] += pr;
  return law;
}

}  // namespace permlab
