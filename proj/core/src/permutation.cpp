#include "permlab/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>

#include "permlab/errors.hpp"

namespace permlab {

Permutation::Permutation(std::vector<int> entries) : v_(std::move(entries)) {
  const int n = size();
  if (n < 1) throw PreconditionError("permutation must have at least one entry");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int x : v_) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x)])
      throw PreconditionError("entries are not a bijection of 1..n");
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

Permutation make_unchecked(std::vector<int> entries) {
  return Permutation(std::move(entries), Permutation::Unchecked{});
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw PreconditionError("n must be >= 1");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return make_unchecked(std::move(v));
}

Permutation Permutation::reversed(int n) {
  if (n < 1) throw PreconditionError("n must be >= 1");
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
  return make_unchecked(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::string s(text);
  const bool separated = s.find_first_of(" ,\t") != std::string::npos;
  std::vector<int> v;
  if (separated) {
    for (char& c : s)
      if (c == ',' || c == '\t') c = ' ';
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
      if (!std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw PreconditionError("bad permutation token '" + tok + "'");
      v.push_back(std::stoi(tok));
    }
  } else {
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw PreconditionError("bad permutation text '" + s + "'");
      v.push_back(c - '0');
    }
  }
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> w(v_.size());
  for (std::size_t i = 0; i < v_.size(); ++i) w[static_cast<std::size_t>(v_[i] - 1)] = static_cast<int>(i) + 1;
  return make_unchecked(std::move(w));
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v_[i]);
  }
  return out;
}

std::string Permutation::compact() const {
  if (size() > 9) return to_string();
  std::string out;
  for (int x : v_) out += static_cast<char>('0' + x);
  return out;
}

Permutation pattern(const Permutation& sigma, const std::vector<int>& idx) {
  if (idx.empty()) throw PreconditionError("pattern: empty position set");
  const int n = sigma.size();
  for (std::size_t a = 0; a < idx.size(); ++a) {
    if (idx[a] < 1 || idx[a] > n) throw PreconditionError("pattern: position out of range");
    if (a && idx[a] <= idx[a - 1]) throw PreconditionError("pattern: positions must increase");
  }
  const std::size_t m = idx.size();
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return sigma(idx[static_cast<std::size_t>(a)]) < sigma(idx[static_cast<std::size_t>(b)]); });
  std::vector<int> out(m);
  for (std::size_t r = 0; r < m; ++r) out[static_cast<std::size_t>(order[r])] = static_cast<int>(r) + 1;
  return make_unchecked(std::move(out));
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
  std::vector<int> v(a.entries());
  for (int x : b.entries()) v.push_back(x + a.size());
  return make_unchecked(std::move(v));
}

Permutation skew_sum(const Permutation& a, const Permutation& b) {
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(a.size() + b.size()));
  for (int x : a.entries()) v.push_back(x + b.size());
  for (int x : b.entries()) v.push_back(x);
  return make_unchecked(std::move(v));
}

int descents(const Permutation& sigma) {
  int d = 0;
  for (int i = 1; i < sigma.size(); ++i)
    if (sigma(i) > sigma(i + 1)) ++d;
  return d;
}

Permutation remove_point(const Permutation& sigma, int k) {
  const int n = sigma.size();
  if (n < 2) throw PreconditionError("remove_point: need at least two points");
  if (k < 1 || k > n) throw PreconditionError("remove_point: position out of range");
  const int gone = sigma(k);
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 1; i <= n; ++i) {
    if (i == k) continue;
    const int x = sigma(i);
    v.push_back(x > gone ? x - 1 : x);
  }
  return make_unchecked(std::move(v));
}

Permutation reverse_complement(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(n - i)] = n + 1 - sigma(i);
  return make_unchecked(std::move(v));
}

bool is_separable_scan(const Permutation& sigma) {
  const int n = sigma.size();
  if (n > 50) throw SizeBoundError("is_separable_scan: n > 50");
  const auto& v = sigma.entries();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          const int A = v[static_cast<std::size_t>(a)], B = v[static_cast<std::size_t>(b)];
          const int C = v[static_cast<std::size_t>(c)], D = v[static_cast<std::size_t>(d)];
          // 3142: B < D < A < C
          if (B < D && D < A && A < C) return false;
          // 2413: C < A < D < B
          if (C < A && A < D && D < B) return false;
        }
  return true;
}

std::optional<DecoratedTree> separating_tree(const Permutation& sigma) {
  const int n = sigma.size();
  const auto& v = sigma.entries();
  DecoratedTree t;  // node 0 is a placeholder leaf, reused for the root
  struct Job {
    int lo, hi;  // 0-based inclusive positions
    int parent;
    bool right;
  };
  std::vector<Job> stack{{0, n - 1, -1, false}};
  int label = 0;
  bool first = true;
  while (!stack.empty()) {
    Job job = stack.back();
    stack.pop_back();
    int node;
    if (first) {
      node = 0;
      first = false;
    } else {
      node = t.add_leaf();
    }
    if (job.parent >= 0) {
      auto& par = t.node(job.parent);
      (job.right ? par.right : par.left) = node;
    }
    if (job.lo == job.hi) continue;
    int lo_val = n + 1, hi_val = 0;
    for (int i = job.lo; i <= job.hi; ++i) {
      lo_val = std::min(lo_val, v[static_cast<std::size_t>(i)]);
      hi_val = std::max(hi_val, v[static_cast<std::size_t>(i)]);
    }
    int pmin = n + 1, pmax = 0, split = -1;
    Sign s = Sign::Plus;
    for (int m = job.lo; m < job.hi; ++m) {
      pmin = std::min(pmin, v[static_cast<std::size_t>(m)]);
      pmax = std::max(pmax, v[static_cast<std::size_t>(m)]);
      const int len = m - job.lo + 1;
      if (pmin == lo_val && pmax == lo_val + len - 1) {
        split = m;
        s = Sign::Plus;
        break;
      }
      if (pmax == hi_val && pmin == hi_val - len + 1) {
        split = m;
        s = Sign::Minus;
        break;
      }
    }
    if (split < 0) return std::nullopt;
    auto& nd = t.node(node);
    nd.sign = s;
    nd.label = ++label;
    nd.left = nd.right = -2;  // filled by the children
    stack.push_back({split + 1, job.hi, node, true});
    stack.push_back({job.lo, split, node, false});
  }
  t.set_root(0);
  return t;
}

bool is_separable(const Permutation& sigma) { return separating_tree(sigma).has_value(); }

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(make_unchecked(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int x : p.entries()) {
    h ^= static_cast<std::size_t>(x);
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace permlab
