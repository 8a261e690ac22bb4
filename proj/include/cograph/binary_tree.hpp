#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cograph/cotree.hpp"
#include "cograph/rng.hpp"

namespace cograph {

/// Plane binary tree with labeled leaves and 0/1-decorated internal nodes.
/// Left/right order is significant. Node ids are arbitrary; leaves carry
/// labels 1..k.
class PlaneBinaryTree {
 public:
  static constexpr int kNone = -1;

  PlaneBinaryTree() = default;
  /// Requires every internal node of t to have exactly two children; the
  /// stored child order of t becomes left/right.
  explicit PlaneBinaryTree(const Cotree& t);

  std::size_t leaf_count() const noexcept { return (nodes_.size() + 1) / 2; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  int root() const noexcept { return root_; }
  int left(int v) const { return nodes_[idx(v)].left; }
  int right(int v) const { return nodes_[idx(v)].right; }
  int parent(int v) const { return nodes_[idx(v)].parent; }
  bool is_leaf(int v) const { return nodes_[idx(v)].left == kNone; }
  int label(int v) const { return nodes_[idx(v)].label; }
  Decoration decoration(int v) const { return nodes_[idx(v)].decoration; }
  void set_decoration(int v, Decoration d);
  /// Node id of the leaf with the given label.
  int leaf_with_label(int label) const;

  /// Leaves from left to right.
  std::vector<int> leaves_in_order() const;
  /// Children kept in plane order.
  Cotree to_cotree() const;
  /// Cotree text format with children in plane order.
  std::string to_string() const;

  friend bool operator==(const PlaneBinaryTree& a, const PlaneBinaryTree& b) { return a.to_string() == b.to_string(); }

  /// Leaf insertion step: a new internal node with decoration d replaces the
  /// edge above `at` (or the root), with the new leaf on the given side.
  void insert_leaf(int at, bool new_leaf_on_left, Decoration d);
  /// Single leaf with label 1.
  static PlaneBinaryTree single_leaf();

 private:
  struct Node {
    int left = kNone;
    int right = kNone;
    int parent = kNone;
    int label = 0;
    Decoration decoration = Decoration::Leaf;
  };
  static std::size_t idx(int v) { return static_cast<std::size_t>(v); }
  std::vector<Node> nodes_;
  int root_ = kNone;
};

PlaneBinaryTree parse_plane_binary_tree(std::string_view text);

/// Uniform plane labeled binary tree with k leaves (Remy's leaf insertion:
/// leaf i + 1 goes on a uniform one of the 2i - 1 edges, on a uniform side),
/// each internal node decorated 0 with probability p independently.
PlaneBinaryTree sample_binary_decorated(std::size_t k, double p, Rng& rng);

/// Flips the decoration of every ancestor of `leaf` that has `leaf` in its
/// right subtree. An involution that preserves shape and labels.
PlaneBinaryTree flip_involution(const PlaneBinaryTree& b, int leaf);

/// Leaves ordered so that, at a 0-node, the left subtree precedes the right
/// one and at a 1-node the right precedes the left.
std::vector<int> rank_order(const PlaneBinaryTree& b);

/// 1-based position of `leaf` in rank_order(b).
std::size_t rank_of(const PlaneBinaryTree& b, int leaf);

/// Degree of `leaf` in the cograph of b: for every 1-decorated ancestor, the
/// leaves of the sibling subtree on the path. O(k).
std::size_t binary_leaf_degree(const PlaneBinaryTree& b, int leaf);

}  // namespace cograph
