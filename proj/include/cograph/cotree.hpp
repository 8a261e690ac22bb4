#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cograph/graph.hpp"

namespace cograph {

enum class Decoration : std::uint8_t { Zero = 0, One = 1, Leaf = 2 };

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

/// Rooted non-plane tree whose internal nodes carry a 0/1 decoration and have
/// at least two children. Leaves are either all unlabeled or labeled by a
/// bijection onto 1..n.
///
/// Nodes live in an arena; every child has a larger id than its parent, so a
/// reverse id sweep is a valid bottom-up order. The leaves of each subtree are
/// contiguous in the stored depth-first order, which gives O(1) subtree size
/// and ancestor queries. Immutable once built.
class Cotree {
 public:
  class Builder;

  class ChildRange {
   public:
    class iterator {
     public:
      using value_type = NodeId;
      using difference_type = std::ptrdiff_t;
      iterator() = default;
      iterator(const Cotree* t, NodeId at) : t_(t), at_(at) {}
      NodeId operator*() const { return at_; }
      iterator& operator++() {
        at_ = t_->next_sibling(at_);
        return *this;
      }
      iterator operator++(int) {
        iterator old = *this;
        ++*this;
        return old;
      }
      bool operator==(const iterator& other) const { return at_ == other.at_; }

     private:
      const Cotree* t_ = nullptr;
      NodeId at_ = kNoNode;
    };
    ChildRange(const Cotree* t, NodeId first) : t_(t), first_(first) {}
    iterator begin() const { return {t_, first_}; }
    iterator end() const { return {t_, kNoNode}; }

   private:
    const Cotree* t_;
    NodeId first_;
  };

  /// Number of leaves.
  std::size_t size() const noexcept { return leaves_.size(); }
  std::size_t node_count() const noexcept { return decoration_.size(); }
  NodeId root() const noexcept { return 0; }

  Decoration decoration(NodeId v) const { return decoration_[idx(v)]; }
  bool is_leaf(NodeId v) const { return decoration_[idx(v)] == Decoration::Leaf; }
  NodeId parent(NodeId v) const { return parent_[idx(v)]; }
  NodeId first_child(NodeId v) const { return first_child_[idx(v)]; }
  NodeId next_sibling(NodeId v) const { return next_sibling_[idx(v)]; }
  ChildRange children(NodeId v) const { return {this, first_child(v)}; }
  std::size_t child_count(NodeId v) const;
  std::size_t depth(NodeId v) const { return static_cast<std::size_t>(depth_[idx(v)]); }
  std::size_t leaf_count(NodeId v) const { return static_cast<std::size_t>(leaf_count_[idx(v)]); }
  /// Position of the subtree's first leaf in the depth-first leaf order.
  std::size_t first_leaf_position(NodeId v) const { return static_cast<std::size_t>(first_leaf_[idx(v)]); }
  bool is_ancestor(NodeId a, NodeId v) const;

  bool is_labeled() const noexcept { return labeled_; }
  /// Label in 1..n, or 0 for unlabeled trees and internal nodes.
  int label(NodeId v) const { return label_[idx(v)]; }

  /// Leaves in stored depth-first order.
  std::span<const NodeId> leaves() const noexcept { return leaves_; }
  /// Vertex index of a leaf in cograph_of(): label - 1 when labeled, else the
  /// depth-first position.
  std::size_t vertex_of(NodeId leaf) const;
  /// Leaf ids indexed by vertex.
  std::vector<NodeId> vertex_leaves() const;

  std::size_t internal_count() const noexcept { return node_count() - size(); }

  friend bool operator==(const Cotree&, const Cotree&) = default;

 private:
  static std::size_t idx(NodeId v) { return static_cast<std::size_t>(v); }
  void finalize();

  std::vector<Decoration> decoration_;
  std::vector<NodeId> parent_;
  std::vector<NodeId> first_child_;
  std::vector<NodeId> next_sibling_;
  std::vector<std::int32_t> depth_;
  std::vector<std::int32_t> leaf_count_;
  std::vector<std::int32_t> first_leaf_;
  std::vector<int> label_;
  std::vector<NodeId> leaves_;
  bool labeled_ = false;
};

/// Top-down construction: a node is added under an existing parent, children
/// keep insertion order. build() validates the cotree invariants.
class Cotree::Builder {
 public:
  Builder() = default;
  explicit Builder(std::size_t reserve_nodes);

  NodeId add_root(Decoration d, int label = 0) { return add(kNoNode, d, label); }
  NodeId add_child(NodeId parent, Decoration d, int label = 0) { return add(parent, d, label); }
  std::size_t node_count() const noexcept { return tree_.decoration_.size(); }

  /// Throws InvalidArgument on arity < 2, mixed labeling, or labels that are
  /// not a bijection onto 1..n.
  Cotree build() &&;

 private:
  NodeId add(NodeId parent, Decoration d, int label);
  Cotree tree_;
  std::vector<NodeId> last_child_;
};

Cotree single_leaf(int label = 1);

/// Canonical = decorations alternate along every root-to-leaf path.
bool is_canonical(const Cotree& t);

/// Cotree text format: a leaf is a decimal label or '*', an internal node is
/// "(" d child child ... ")" with single spaces, e.g. "(1 1 (0 2 3))".
std::string to_string(const Cotree& t);
Cotree parse_cotree(std::string_view text);

/// Non-plane key: decoration followed by the sorted encodings of the children.
/// Leaf labels are included when `with_labels` is set and the tree is labeled.
std::string canonical_encoding(const Cotree& t, bool with_labels = true);

Cotree without_labels(const Cotree& t);
/// Leaves receive labels[vertex_of(leaf)].
Cotree with_labels(const Cotree& t, std::span<const int> labels);

/// Graph with one vertex per leaf (see Cotree::vertex_of); two vertices are
/// adjacent iff their first common ancestor is decorated 1.
Graph cograph_of(const Cotree& t);
/// Same graph with vertices numbered by the stored depth-first leaf order.
Graph cograph_in_dfs_order(const Cotree& t);

NodeId first_common_ancestor(const Cotree& t, NodeId u, NodeId v);

/// Unique canonical cotree of g with leaf labels = vertex ids + 1. Uses the
/// O(n^2) component / co-component recursion. Throws NotACograph carrying the
/// first vertex set whose graph and complement are both connected.
Cotree canonical_cotree_of(const Graph& g);

/// Contracts every edge whose child has its parent's decoration.
Cotree canonicalize(const Cotree& t);

/// Labeled cotree on the marked leaves: internal nodes are the first common
/// ancestors of marked leaves, decorations are inherited and marked leaf
/// `leaves[i]` becomes label i + 1.
Cotree induced_cotree(const Cotree& t, std::span<const NodeId> leaves);

/// Degree of every vertex of cograph_of(t), indexed like Cotree::vertex_of.
/// One top-down sweep: a leaf collects, for each 1-decorated ancestor a, the
/// leaves of a outside the child of a it descends from.
std::vector<std::int64_t> degree_vector(const Cotree& t);

/// Leaves in depth-first order with children sorted by smallest contained
/// label (stored order for unlabeled trees). A seed shuffles children instead.
std::vector<NodeId> leaf_dfs_order(const Cotree& t, std::optional<std::uint64_t> seed = std::nullopt);

/// Counts used by the marked-tree product formulas: internal nodes and the
/// internal edges joining equal / different decorations.
struct EdgeProfile {
  std::size_t leaves = 0;
  std::size_t internal_nodes = 0;
  std::size_t equal_edges = 0;
  std::size_t unequal_edges = 0;
};
EdgeProfile edge_profile(const Cotree& t);

}  // namespace cograph
