#include "cograph/binary_tree.hpp"

#include <algorithm>

#include "cograph/errors.hpp"

namespace cograph {

PlaneBinaryTree::PlaneBinaryTree(const Cotree& t) {
  if (!t.is_labeled()) throw InvalidArgument("plane binary tree needs labeled leaves");
  nodes_.resize(t.node_count());
  for (std::size_t i = 0; i < t.node_count(); ++i) {
    const auto v = static_cast<NodeId>(i);
    Node& n = nodes_[i];
    n.parent = t.parent(v);
    n.decoration = t.decoration(v);
    if (t.is_leaf(v)) {
      n.label = t.label(v);
      continue;
    }
    if (t.child_count(v) != 2) throw InvalidArgument("plane binary tree: node with more than two children");
    n.left = t.first_child(v);
    n.right = t.next_sibling(n.left);
  }
  root_ = 0;
}

PlaneBinaryTree PlaneBinaryTree::single_leaf() {
  PlaneBinaryTree b;
  b.nodes_.push_back(Node{kNone, kNone, kNone, 1, Decoration::Leaf});
  b.root_ = 0;
  return b;
}

void PlaneBinaryTree::set_decoration(int v, Decoration d) {
  if (is_leaf(v) || d == Decoration::Leaf) throw InvalidArgument("decorations belong to internal nodes");
  nodes_[idx(v)].decoration = d;
}

int PlaneBinaryTree::leaf_with_label(int label) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].left == kNone && nodes_[i].label == label) return static_cast<int>(i);
  throw InvalidArgument("no leaf with label " + std::to_string(label));
}

void PlaneBinaryTree::insert_leaf(int at, bool new_leaf_on_left, Decoration d) {
  const int leaf = static_cast<int>(nodes_.size());
  const int internal = leaf + 1;
  const int up = nodes_[idx(at)].parent;
  nodes_.push_back(Node{kNone, kNone, internal, static_cast<int>(leaf_count()) + 1, Decoration::Leaf});
  Node inner{kNone, kNone, up, 0, d};
  inner.left = new_leaf_on_left ? leaf : at;
  inner.right = new_leaf_on_left ? at : leaf;
  nodes_.push_back(inner);
  nodes_[idx(at)].parent = internal;
  if (up == kNone) {
    root_ = internal;
  } else {
    Node& p = nodes_[idx(up)];
    (p.left == at ? p.left : p.right) = internal;
  }
}

std::vector<int> PlaneBinaryTree::leaves_in_order() const {
  std::vector<int> out;
  out.reserve(leaf_count());
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (is_leaf(v)) {
      out.push_back(v);
    } else {
      stack.push_back(right(v));
      stack.push_back(left(v));
    }
  }
  return out;
}

Cotree PlaneBinaryTree::to_cotree() const {
  Cotree::Builder b(nodes_.size());
  std::vector<std::pair<int, NodeId>> stack{{root_, kNoNode}};
  while (!stack.empty()) {
    const auto [v, parent] = stack.back();
    stack.pop_back();
    const NodeId id = b.add_child(parent, decoration(v), is_leaf(v) ? label(v) : 0);
    if (!is_leaf(v)) {
      stack.emplace_back(right(v), id);
      stack.emplace_back(left(v), id);
    }
  }
  return std::move(b).build();
}

std::string PlaneBinaryTree::to_string() const { return cograph::to_string(to_cotree()); }

PlaneBinaryTree parse_plane_binary_tree(std::string_view text) { return PlaneBinaryTree(parse_cotree(text)); }

PlaneBinaryTree sample_binary_decorated(std::size_t k, double p, Rng& rng) {
  if (k == 0) throw InvalidArgument("sample_binary_decorated: k must be positive");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("sample_binary_decorated: p must lie in [0, 1]");
  PlaneBinaryTree b = PlaneBinaryTree::single_leaf();
  for (std::size_t i = 1; i < k; ++i) {
    const auto at = static_cast<int>(rng.below(b.node_count()));
    const bool left = rng.below(2) == 0;
    const Decoration d = rng.bernoulli(p) ? Decoration::Zero : Decoration::One;
    b.insert_leaf(at, left, d);
  }
  return b;
}

PlaneBinaryTree flip_involution(const PlaneBinaryTree& b, int leaf) {
  if (leaf < 0 || static_cast<std::size_t>(leaf) >= b.node_count() || !b.is_leaf(leaf))
    throw InvalidArgument("flip_involution: not a leaf");
  PlaneBinaryTree out = b;
  for (int child = leaf, v = b.parent(leaf); v != PlaneBinaryTree::kNone; child = v, v = b.parent(v)) {
    if (b.right(v) != child) continue;
    out.set_decoration(v, b.decoration(v) == Decoration::Zero ? Decoration::One : Decoration::Zero);
  }
  return out;
}

std::vector<int> rank_order(const PlaneBinaryTree& b) {
  std::vector<int> out;
  out.reserve(b.leaf_count());
  std::vector<int> stack{b.root()};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (b.is_leaf(v)) {
      out.push_back(v);
      continue;
    }
    const bool swap = b.decoration(v) == Decoration::One;
    stack.push_back(swap ? b.left(v) : b.right(v));
    stack.push_back(swap ? b.right(v) : b.left(v));
  }
  return out;
}

std::size_t rank_of(const PlaneBinaryTree& b, int leaf) {
  const auto order = rank_order(b);
  const auto it = std::find(order.begin(), order.end(), leaf);
  if (it == order.end()) throw InvalidArgument("rank_of: not a leaf");
  return static_cast<std::size_t>(it - order.begin()) + 1;
}

std::size_t binary_leaf_degree(const PlaneBinaryTree& b, int leaf) {
  if (leaf < 0 || static_cast<std::size_t>(leaf) >= b.node_count() || !b.is_leaf(leaf))
    throw InvalidArgument("binary_leaf_degree: not a leaf");
  // Subtree sizes are only needed for siblings on the path.
  auto leaves_below = [&](int v) {
    std::size_t count = 0;
    std::vector<int> stack{v};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      if (b.is_leaf(x)) {
        ++count;
      } else {
        stack.push_back(b.left(x));
        stack.push_back(b.right(x));
      }
    }
    return count;
  };
  std::size_t degree = 0;
  for (int child = leaf, v = b.parent(leaf); v != PlaneBinaryTree::kNone; child = v, v = b.parent(v)) {
    if (b.decoration(v) != Decoration::One) continue;
    degree += leaves_below(b.left(v) == child ? b.right(v) : b.left(v));
  }
  return degree;
}

}  // namespace cograph
