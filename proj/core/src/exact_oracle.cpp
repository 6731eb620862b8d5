#include "permlab/exact_oracle.hpp"

#include <map>
#include <utility>

#include "permlab/chain_sampler.hpp"
#include "permlab/errors.hpp"
#include "permlab/tree_density.hpp"

namespace permlab {

namespace {

void check_p(const Rational& p) {
  if (!(p > 0 && p < 1)) throw PreconditionError("p must lie strictly between 0 and 1");
}

void check_n(int n, int bound, const char* what) {
  if (n < 1) throw PreconditionError(std::string(what) + ": n must be >= 1");
  if (n > bound)
    throw SizeBoundError(std::string(what) + ": n exceeds bound " + std::to_string(bound));
}

template <class Step>
ExactDist forward_pass(int n, const Rational& p, Step step) {
  ExactLaw<Permutation> law{{Permutation::identity(1), Rational(1)}};
  for (int k = 1; k < n; ++k) {
    ExactLaw<Permutation> next;
    const Rational plus = p / k, minus = (1 - p) / k;
    for (const auto& [tau, w] : law)
      for (int j = 1; j <= k; ++j) {
        next[step(tau, j, Sign::Plus)] += w * plus;
        next[step(tau, j, Sign::Minus)] += w * minus;
      }
    law = std::move(next);
  }
  return ExactDist{n, std::move(law)};
}

}  // namespace

ExactDist enumerate(int n, const Rational& p) {
  check_p(p);
  check_n(n, kOracleBound, "enumerate");
  return forward_pass(n, p, [](const Permutation& t, int j, Sign s) { return inflate_at_value(t, j, s); });
}

ExactDist enumerate_lambda(int n, const Rational& p) {
  check_p(p);
  check_n(n, kOracleBound, "enumerate_lambda");
  return forward_pass(n, p, [](const Permutation& t, int k, Sign s) { return inflate_at_position(t, k, s); });
}

Rational check_consistency(int n, const Rational& p) {
  check_p(p);
  check_n(n + 1, kOracleBound, "check_consistency");
  const ExactDist big = enumerate_lambda(n + 1, p);
  ExactLaw<Permutation> removed;
  for (const auto& [pi, w] : big.prob)
    for (int k = 1; k <= n + 1; ++k) removed[remove_point(pi, k)] += w / (n + 1);
  return max_abs_deviation(removed, enumerate_lambda(n, p).prob);
}

Rational check_self_similarity(int n, const Rational& p) {
  check_p(p);
  if (n < 2) throw PreconditionError("check_self_similarity: the mixture needs n >= 2");
  check_n(n, 7, "check_self_similarity");
  std::vector<ExactDist> laws;
  for (int m = 1; m < n; ++m) laws.push_back(enumerate(m, p));
  ExactLaw<Permutation> mix;
  const Rational pick = Rational(1, n - 1);
  for (int i = 1; i < n; ++i) {
    const auto& left = laws[static_cast<std::size_t>(i - 1)].prob;
    const auto& right = laws[static_cast<std::size_t>(n - i - 1)].prob;
    for (const auto& [tau, a] : left)
      for (const auto& [rho, b] : right) {
        const Rational w = pick * a * b;
        mix[direct_sum(tau, rho)] += w * p;
        mix[skew_sum(tau, rho)] += w * (1 - p);
      }
  }
  return max_abs_deviation(mix, enumerate(n, p).prob);
}

void for_each_increasing_tree(int n, const std::function<void(const DecoratedTree&)>& visit) {
  check_n(n, kOracleBound, "for_each_increasing_tree");
  // Step k splits one of the k current leaves, so labels increase downwards
  // and every increasing tree is produced exactly once.
  struct Frame {
    DecoratedTree t;
    std::vector<int> leaves;
  };
  std::vector<Frame> stack{{DecoratedTree(), {0}}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    const int k = static_cast<int>(f.leaves.size());
    if (k == n) {
      visit(f.t);
      continue;
    }
    for (int li = k - 1; li >= 0; --li)
      for (Sign s : {Sign::Minus, Sign::Plus}) {
        Frame g = f;
        const int left = g.t.split_leaf(g.leaves[static_cast<std::size_t>(li)], s, k);
        g.leaves[static_cast<std::size_t>(li)] = left;
        g.leaves.push_back(left + 1);
        stack.push_back(std::move(g));
      }
  }
}

ExactLaw<Permutation> brute_inc_counts(int n) {
  ExactLaw<Permutation> counts;
  for_each_increasing_tree(n, [&](const DecoratedTree& t) { counts[perm_of_tree(t)] += 1; });
  return counts;
}

SimpleGraph cotree_graph(const DecoratedTree& t) {
  const std::vector<int> leaves = t.leaves_in_order();
  const int n = static_cast<int>(leaves.size());
  std::vector<int> vertex_of(static_cast<std::size_t>(t.node_count()), 0);
  for (int i = 0; i < n; ++i) vertex_of[static_cast<std::size_t>(leaves[static_cast<std::size_t>(i)])] = i + 1;
  SimpleGraph g(n);
  // Leaf vertex lists per subtree, built children first.
  std::vector<int> order;
  std::vector<int> stack{t.root()};
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    order.push_back(i);
    if (!t.node(i).is_leaf()) {
      stack.push_back(t.node(i).right);
      stack.push_back(t.node(i).left);
    }
  }
  std::vector<std::vector<int>> below(static_cast<std::size_t>(t.node_count()));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto& nd = t.node(*it);
    auto& mine = below[static_cast<std::size_t>(*it)];
    if (nd.is_leaf()) {
      mine.push_back(vertex_of[static_cast<std::size_t>(*it)]);
      continue;
    }
    const auto& a = below[static_cast<std::size_t>(nd.left)];
    const auto& b = below[static_cast<std::size_t>(nd.right)];
    if (nd.sign == Sign::Minus)
      for (int x : a)
        for (int y : b) g.add_edge(x, y);
    mine = a;
    mine.insert(mine.end(), b.begin(), b.end());
  }
  return g;
}

GraphLaw cograph_law(int n, const Rational& p) {
  check_n(n, 6, "cograph_law");
  GraphLaw law;
  for (const auto& [pi, w] : enumerate(n, p).prob) law[canonical_form(inversion_graph(pi))] += w;
  return law;
}

GraphLaw cograph_chain_law(int n, const Rational& p) {
  check_p(p);
  check_n(n, 6, "cograph_chain_law");
  std::map<std::string, std::pair<SimpleGraph, Rational>> states;
  states.emplace(canonical_form(SimpleGraph(1)), std::make_pair(SimpleGraph(1), Rational(1)));
  for (int k = 1; k < n; ++k) {
    std::map<std::string, std::pair<SimpleGraph, Rational>> next;
    for (const auto& [key, st] : states) {
      const SimpleGraph& g = st.first;
      for (int v = 1; v <= k; ++v)
        for (bool join : {false, true}) {
          SimpleGraph h(k + 1);
          for (auto [a, b] : g.edges()) h.add_edge(a, b);
          for (int w = 1; w <= k; ++w)
            if (w != v && g.adjacent(v, w)) h.add_edge(k + 1, w);
          if (join) h.add_edge(k + 1, v);
          const Rational w = st.second * (join ? 1 - p : p) / k;
          auto c = canonical_form(h);
          auto it = next.find(c);
          if (it == next.end())
            next.emplace(std::move(c), std::make_pair(std::move(h), w));
          else
            it->second.second += w;
        }
    }
    states = std::move(next);
  }
  GraphLaw law;
  for (auto& [key, st] : states) law[key] = st.second;
  return law;
}

GraphLaw cograph_formula_law(int n, const Rational& p) {
  check_p(p);
  check_n(n, 6, "cograph_formula_law");
  std::map<std::string, std::pair<BigInt, int>> count_and_z;
  for_each_increasing_tree(n, [&](const DecoratedTree& t) {
    const std::string key = canonical_form(cotree_graph(t));
    const int z = t.count_sign(Sign::Plus);
    auto it = count_and_z.find(key);
    if (it == count_and_z.end()) {
      count_and_z.emplace(key, std::make_pair(BigInt(1), z));
    } else {
      if (it->second.second != z) throw StructuralError("cotrees of one graph disagree on union count");
      it->second.first += 1;
    }
  });
  const BigInt fact = factorial(n - 1);
  GraphLaw law;
  for (const auto& [key, cz] : count_and_z)
    law[key] = Rational(cz.first, fact) * rpow(p, cz.second) * rpow(1 - p, n - 1 - cz.second);
  return law;
}

}  // namespace permlab
