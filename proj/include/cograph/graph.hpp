#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cograph/bitrow.hpp"

namespace cograph {

/// Dense symmetric n x n bit matrix, one padded row of 64-bit words per vertex.
/// Mutable builder storage; Graph wraps it once the invariants hold.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool test(std::size_t i, std::size_t j) const { return (row(i)[j >> 6] >> (j & 63)) & 1U; }
  void set(std::size_t i, std::size_t j) { row(i)[j >> 6] |= bitrow::Word{1} << (j & 63); }
  void reset(std::size_t i, std::size_t j) { row(i)[j >> 6] &= ~(bitrow::Word{1} << (j & 63)); }
  /// Sets bits [first, last) of row i.
  void set_range(std::size_t i, std::size_t first, std::size_t last);

  bitrow::Word* row(std::size_t i) { return bits_.data() + i * words_; }
  const bitrow::Word* row(std::size_t i) const { return bits_.data() + i * words_; }
  /// All-ones over the n valid columns, zero in the padding.
  const bitrow::Word* valid_mask() const { return valid_.data(); }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<bitrow::Word> bits_;
  std::vector<bitrow::Word> valid_;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
///
/// Dense operations (complement, components, canonical forms) are intended for
/// n up to about 5e4; statistics on larger cographs go through cotrees.
class Graph {
 public:
  static constexpr std::size_t kDenseLimit = 50000;

  Graph() : Graph(0) {}
  explicit Graph(std::size_t n);
  /// Throws InvalidArgument unless the matrix is symmetric with zero diagonal.
  explicit Graph(BitMatrix adjacency);
  Graph(std::size_t n, std::span<const std::pair<int, int>> edges);

  std::size_t size() const noexcept { return adj_.size(); }
  bool adjacent(std::size_t i, std::size_t j) const { return adj_.test(i, j); }
  std::size_t degree(std::size_t v) const;
  std::size_t edge_count() const;
  /// Sorted (i < j) edge list.
  std::vector<std::pair<int, int>> edges() const;
  const BitMatrix& matrix() const noexcept { return adj_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  BitMatrix adj_;
};

Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph path_graph(std::size_t n);

Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph join(const Graph& g1, const Graph& g2);
Graph complement(const Graph& g);

/// Maximal connected vertex sets, each sorted, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Subgraph on |tuple| positions; positions a, b are adjacent iff
/// tuple[a] != tuple[b] and those vertices are adjacent in g. Repeated
/// vertices give non-adjacent copies.
Graph induced_subgraph(const Graph& g, std::span<const int> tuple);

/// Relabels vertex v as perm[v].
Graph permute(const Graph& g, std::span<const int> perm);

inline constexpr std::size_t kCanonicalFormLimit = 10;

/// Isomorphism-invariant key: a size byte followed by the lexicographically
/// smallest adjacency string over all vertex orders, pairs listed column by
/// column ((0,1), (0,2), (1,2), (0,3), ...). Requires n <= 10.
std::string canonical_form_small(const Graph& g);

/// Edge-list text: first line n, then one "i j" line per edge with i < j.
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(const std::string& text);

}  // namespace cograph
