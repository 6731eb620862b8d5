#pragma once

#include <string>
#include <vector>

#include "permlab/types.hpp"

namespace permlab {

// Rooted binary tree with ordered children. Internal nodes carry a sign and
// an integer label; leaves carry neither. Nodes live in an arena and refer
// to each other by index, -1 meaning "none".
class DecoratedTree {
 public:
  struct Node {
    int left = -1;
    int right = -1;
    int label = 0;
    Sign sign = Sign::Plus;
    bool is_leaf() const { return left < 0 && right < 0; }
  };

  // A single leaf.
  DecoratedTree();

  int add_leaf();
  int add_internal(int left, int right, Sign s, int label);

  // Turns leaf `node` into an internal node with two fresh leaf children.
  // Returns the index of the new left child (right child is that + 1).
  int split_leaf(int node, Sign s, int label);

  int root() const { return root_; }
  void set_root(int r) { root_ = r; }
  const Node& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
  Node& node(int i) { return nodes_[static_cast<std::size_t>(i)]; }
  int node_count() const { return static_cast<int>(nodes_.size()); }

  int leaf_count() const;
  int internal_count() const;
  int count_sign(Sign s) const;
  // Leaf indices in left-to-right order.
  std::vector<int> leaves_in_order() const;

  // Throws StructuralError unless reachable nodes form a binary tree rooted
  // at root() with every internal node having two children.
  void validate() const;
  // Labels are a bijection with 1..internal_count and increase downwards.
  bool is_increasing() const;

  // Bracket form, e.g. "+1(-2(.,.),.)".
  std::string to_string() const;

 private:
  std::vector<Node> nodes_;
  int root_ = 0;
};

}  // namespace permlab
