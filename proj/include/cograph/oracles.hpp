#pragma once

// Exhaustive enumerators used as independent references by the tests and by
// `cographs check`. Everything here is exponential; sizes stay tiny.

#include <cstdint>
#include <string>
#include <vector>

#include "cograph/cotree.hpp"
#include "cograph/graph.hpp"

namespace cograph::oracles {

/// Every set partition of `items` into blocks.
std::vector<std::vector<std::vector<int>>> set_partitions(const std::vector<int>& items);

/// Every labeled canonical cotree on labels 1..n whose root has decoration
/// `root` (the single leaf when n = 1), built from set partitions.
std::vector<Cotree> labeled_canonical_cotrees(int n, Decoration root);
/// Both root decorations (all m_n labeled cographs).
std::vector<Cotree> labeled_canonical_cotrees(int n);

/// Text of every unlabeled tree with n leaves and internal arity >= 2, built
/// as sorted multisets of smaller trees ("*" leaves, "(" children ")").
std::vector<std::string> unlabeled_tree_shapes(int n);
/// Every unlabeled canonical cotree of size n (both root decorations).
std::vector<Cotree> unlabeled_canonical_cotrees(int n);

/// Leaf permutations sigma (vertex v -> sigma[v]) that are automorphisms of
/// cograph_of(t); for a canonical cotree these are exactly the
/// root-preserving tree automorphisms. Tries all n! permutations.
std::vector<std::vector<int>> automorphisms(const Cotree& t);

/// Induced cotree by the definition: nodes are the marked leaves and the
/// first common ancestors of marked pairs, parents are the deepest such
/// proper ancestor, found by walking parent links.
Cotree induced_cotree_naive(const Cotree& t, const std::vector<NodeId>& marked);

/// Marked-tree counts n! [z^n] F found by listing trees on labels 1..n+1 with
/// label n+1 playing the blossom.
struct BlossomCounts {
  std::int64_t total = 0;  ///< L'
  std::int64_t even = 0;
  std::int64_t odd = 0;
};
BlossomCounts labeled_blossom_counts(int n);
/// Same with automorphisms fixing the blossom (U*, U^even, U^odd).
BlossomCounts fixed_blossom_counts(int n);

/// n! [z^n] U: sum of automorphism counts over labeled trees of size n.
std::int64_t tree_automorphism_pairs(int n);
/// n! [z^n] D: pairs (tree, automorphism) of size >= 2 moving every root child.
std::int64_t no_fixed_root_child_pairs(int n);

/// (labeled canonical cotree of size n, k-tuple of distinct leaves) whose
/// induced cotree equals t0.
std::int64_t marked_tuples_inducing(const Cotree& t0, int n);
/// Triples (cotree, automorphism, tuple) as above where the automorphism
/// fixes every first common ancestor of two marked leaves and each child of
/// such a node that leads to a marked leaf.
std::int64_t fixed_marked_tuples_inducing(const Cotree& t0, int n);

/// Minimum number of vertices whose removal disconnects g; n - 1 when no
/// such set exists (complete graphs). Tries every vertex subset.
int min_vertex_cut(const Graph& g);

/// True when no four vertices induce a path.
bool is_p4_free(const Graph& g);

/// Every decorated plane labeled binary tree with k leaves, as text, built
/// from Catalan shapes, label permutations and decoration vectors.
std::vector<std::string> decorated_plane_binary_trees(int k);

}  // namespace cograph::oracles
