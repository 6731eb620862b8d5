#include "permlab/decorated_tree.hpp"

#include <vector>

#include "permlab/errors.hpp"

namespace permlab {

DecoratedTree::DecoratedTree() : nodes_(1) {}

int DecoratedTree::add_leaf() {
  nodes_.emplace_back();
  return node_count() - 1;
}

int DecoratedTree::add_internal(int left, int right, Sign s, int label) {
  Node nd;
  nd.left = left;
  nd.right = right;
  nd.sign = s;
  nd.label = label;
  nodes_.push_back(nd);
  return node_count() - 1;
}

int DecoratedTree::split_leaf(int node, Sign s, int label) {
  if (!this->node(node).is_leaf()) throw StructuralError("split_leaf: node is not a leaf");
  const int l = add_leaf();
  const int r = add_leaf();
  Node& nd = this->node(node);
  nd.left = l;
  nd.right = r;
  nd.sign = s;
  nd.label = label;
  return l;
}

namespace {

// Preorder walk from the root; throws on cycles, dangling or half-filled nodes.
template <class Visit>
void walk(const DecoratedTree& t, Visit&& visit) {
  const int count = t.node_count();
  if (t.root() < 0 || t.root() >= count) throw StructuralError("root out of range");
  std::vector<char> seen(static_cast<std::size_t>(count), 0);
  std::vector<int> stack{t.root()};
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    if (i < 0 || i >= count) throw StructuralError("child index out of range");
    if (seen[static_cast<std::size_t>(i)]) throw StructuralError("node reached twice");
    seen[static_cast<std::size_t>(i)] = 1;
    const auto& nd = t.node(i);
    if ((nd.left < 0) != (nd.right < 0)) throw StructuralError("internal node with one child");
    visit(i);
    if (!nd.is_leaf()) {
      stack.push_back(nd.right);
      stack.push_back(nd.left);
    }
  }
}

}  // namespace

int DecoratedTree::leaf_count() const {
  int c = 0;
  walk(*this, [&](int i) { c += node(i).is_leaf(); });
  return c;
}

int DecoratedTree::internal_count() const { return leaf_count() - 1; }

int DecoratedTree::count_sign(Sign s) const {
  int c = 0;
  walk(*this, [&](int i) { c += !node(i).is_leaf() && node(i).sign == s; });
  return c;
}

std::vector<int> DecoratedTree::leaves_in_order() const {
  std::vector<int> out;
  walk(*this, [&](int i) {
    if (node(i).is_leaf()) out.push_back(i);
  });
  return out;
}

void DecoratedTree::validate() const {
  walk(*this, [](int) {});
}

bool DecoratedTree::is_increasing() const {
  const int m = internal_count();
  std::vector<char> used(static_cast<std::size_t>(m) + 1, 0);
  bool ok = true;
  walk(*this, [&](int i) {
    const auto& nd = node(i);
    if (nd.is_leaf()) return;
    if (nd.label < 1 || nd.label > m || used[static_cast<std::size_t>(nd.label)]) {
      ok = false;
      return;
    }
    used[static_cast<std::size_t>(nd.label)] = 1;
    for (int c : {nd.left, nd.right}) {
      const auto& ch = node(c);
      if (!ch.is_leaf() && ch.label <= nd.label) ok = false;
    }
  });
  return ok;
}

std::string DecoratedTree::to_string() const {
  validate();
  std::string out;
  // Iterative rendering; the tokens ")" and "," are interleaved as markers.
  struct Item {
    int node;
    int stage;
  };
  std::vector<Item> stack{{root_, 0}};
  while (!stack.empty()) {
    Item& it = stack.back();
    const auto& nd = node(it.node);
    if (nd.is_leaf()) {
      out += '.';
      stack.pop_back();
      continue;
    }
    if (it.stage == 0) {
      out += sign_char(nd.sign);
      out += std::to_string(nd.label);
      out += '(';
      it.stage = 1;
      stack.push_back({nd.left, 0});
    } else if (it.stage == 1) {
      out += ',';
      it.stage = 2;
      stack.push_back({nd.right, 0});
    } else {
      out += ')';
      stack.pop_back();
    }
  }
  return out;
}

}  // namespace permlab
