#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "permlab/permutation.hpp"

namespace permlab {

// Simple undirected graph on vertices 1..n stored as an adjacency matrix.
class SimpleGraph {
 public:
  explicit SimpleGraph(int n = 1);

  int size() const { return n_; }
  bool adjacent(int i, int j) const { return adj_[idx(i, j)] != 0; }
  void add_edge(int i, int j);
  void remove_edge(int i, int j);
  int edge_count() const;
  int degree(int i) const;
  std::vector<std::pair<int, int>> edges() const;

  // "n" then one "i j" line per edge with i < j.
  std::string to_string() const;

  SimpleGraph complement() const;
  SimpleGraph induced(const std::vector<int>& vertices) const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j - 1);
  }
  int n_;
  std::vector<std::uint8_t> adj_;
};

// Edge {i,j} iff (i-j)(sigma(i)-sigma(j)) < 0.
SimpleGraph inversion_graph(const Permutation& sigma);

// Brute force over all 4-subsets.
bool has_induced_p4(const SimpleGraph& g);

// Recursive decomposition: every induced subgraph on >= 2 vertices is
// disconnected or has a disconnected complement.
bool is_cograph(const SimpleGraph& g);

// Lexicographically smallest upper-triangle adjacency string over all
// vertex orders, prefixed by "n:". Requires n <= 8.
std::string canonical_form(const SimpleGraph& g);

}  // namespace permlab
