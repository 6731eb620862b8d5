#include "permlab/graph.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "permlab/errors.hpp"

namespace permlab {

SimpleGraph::SimpleGraph(int n) : n_(n) {
  if (n < 1) throw PreconditionError("graph needs at least one vertex");
  adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

void SimpleGraph::add_edge(int i, int j) {
  if (i < 1 || j < 1 || i > n_ || j > n_) throw PreconditionError("vertex out of range");
  if (i == j) throw PreconditionError("loops are not allowed");
  adj_[idx(i, j)] = adj_[idx(j, i)] = 1;
}

void SimpleGraph::remove_edge(int i, int j) {
  if (i < 1 || j < 1 || i > n_ || j > n_) throw PreconditionError("vertex out of range");
  adj_[idx(i, j)] = adj_[idx(j, i)] = 0;
}

int SimpleGraph::edge_count() const {
  int c = 0;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j) c += adjacent(i, j);
  return c;
}

int SimpleGraph::degree(int i) const {
  int d = 0;
  for (int j = 1; j <= n_; ++j) d += adjacent(i, j);
  return d;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (adjacent(i, j)) out.emplace_back(i, j);
  return out;
}

std::string SimpleGraph::to_string() const {
  std::string out = std::to_string(n_) + "\n";
  for (auto [i, j] : edges()) out += std::to_string(i) + " " + std::to_string(j) + "\n";
  return out;
}

SimpleGraph SimpleGraph::complement() const {
  SimpleGraph g(n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (!adjacent(i, j)) g.add_edge(i, j);
  return g;
}

SimpleGraph SimpleGraph::induced(const std::vector<int>& vertices) const {
  const int m = static_cast<int>(vertices.size());
  SimpleGraph g(m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (adjacent(vertices[static_cast<std::size_t>(a)], vertices[static_cast<std::size_t>(b)]))
        g.add_edge(a + 1, b + 1);
  return g;
}

SimpleGraph inversion_graph(const Permutation& sigma) {
  const int n = sigma.size();
  SimpleGraph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (sigma(i) > sigma(j)) g.add_edge(i, j);
  return g;
}

bool has_induced_p4(const SimpleGraph& g) {
  const int n = g.size();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) {
          const int v[4] = {a, b, c, d};
          int deg[4] = {0, 0, 0, 0};
          int e = 0;
          for (int x = 0; x < 4; ++x)
            for (int y = x + 1; y < 4; ++y)
              if (g.adjacent(v[x], v[y])) {
                ++e;
                ++deg[x];
                ++deg[y];
              }
          if (e != 3) continue;
          std::sort(deg, deg + 4);
          // Three edges with degrees 1,1,2,2 is exactly a path; 1,1,1,3 is a
          // star and 0,2,2,2 a triangle.
          if (deg[0] == 1 && deg[1] == 1 && deg[2] == 2 && deg[3] == 2) return true;
        }
  return false;
}

namespace {

// Connected components of the subgraph induced on `vs`, using adjacency in g
// (or non-adjacency when comp is set).
std::vector<std::vector<int>> components(const SimpleGraph& g, const std::vector<int>& vs,
                                         bool comp) {
  std::vector<std::vector<int>> out;
  std::vector<char> done(vs.size(), 0);
  for (std::size_t s = 0; s < vs.size(); ++s) {
    if (done[s]) continue;
    std::vector<int> part;
    std::vector<std::size_t> queue{s};
    done[s] = 1;
    while (!queue.empty()) {
      const std::size_t a = queue.back();
      queue.pop_back();
      part.push_back(vs[a]);
      for (std::size_t b = 0; b < vs.size(); ++b) {
        if (done[b]) continue;
        if (g.adjacent(vs[a], vs[b]) != comp) {
          done[b] = 1;
          queue.push_back(b);
        }
      }
    }
    out.push_back(std::move(part));
  }
  return out;
}

}  // namespace

bool is_cograph(const SimpleGraph& g) {
  std::vector<int> all(static_cast<std::size_t>(g.size()));
  std::iota(all.begin(), all.end(), 1);
  std::vector<std::vector<int>> stack{all};
  while (!stack.empty()) {
    auto vs = std::move(stack.back());
    stack.pop_back();
    if (vs.size() < 2) continue;
    auto parts = components(g, vs, false);
    if (parts.size() == 1) parts = components(g, vs, true);
    if (parts.size() == 1) return false;
    for (auto& p : parts) stack.push_back(std::move(p));
  }
  return true;
}

std::string canonical_form(const SimpleGraph& g) {
  const int n = g.size();
  if (n > 8) throw SizeBoundError("canonical_form: n > 8");
  std::uint64_t raw = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) raw = (raw << 1) | static_cast<std::uint64_t>(g.adjacent(i, j));
  const std::uint64_t key = (raw << 4) | static_cast<std::uint64_t>(n);

  static std::mutex mu;
  static std::unordered_map<std::uint64_t, std::string> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t bits = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        bits = (bits << 1) |
               static_cast<std::uint64_t>(g.adjacent(order[static_cast<std::size_t>(a)], order[static_cast<std::size_t>(b)]));
    best = std::min(best, bits);
  } while (std::next_permutation(order.begin(), order.end()));

  const int len = n * (n - 1) / 2;
  std::string out = std::to_string(n) + ":";
  for (int b = len - 1; b >= 0; --b) out += ((best >> b) & 1U) ? '1' : '0';
  if (len == 0) out += '-';

  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, out);
  return out;
}

}  // namespace permlab
