#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "cograph/errors.hpp"
#include "cograph/graph.hpp"
#include "cograph/rng.hpp"

using namespace cograph;

TEST(Graph, BasicFamilies) {
  EXPECT_EQ(complete_graph(5).edge_count(), 10U);
  EXPECT_EQ(empty_graph(5).edge_count(), 0U);
  EXPECT_EQ(path_graph(4).edge_count(), 3U);
  EXPECT_EQ(complete_graph(4).degree(2), 3U);
}

TEST(Graph, RejectsAsymmetricMatrix) {
  BitMatrix m(3);
  m.set(0, 1);
  EXPECT_THROW(Graph{m}, InvalidArgument);
  BitMatrix loop(2);
  loop.set(1, 1);
  EXPECT_THROW(Graph{loop}, InvalidArgument);
}

TEST(Graph, JoinAndUnion) {
  const Graph k2 = complete_graph(2);
  const Graph e2 = empty_graph(2);
  EXPECT_EQ(disjoint_union(k2, k2).edge_count(), 2U);
  EXPECT_EQ(join(e2, e2).edge_count(), 4U);
  EXPECT_EQ(complement(complete_graph(4)), empty_graph(4));
  EXPECT_FALSE(is_connected(disjoint_union(k2, k2)));
  EXPECT_TRUE(is_connected(join(e2, e2)));
  EXPECT_EQ(connected_components(disjoint_union(k2, e2)).size(), 3U);
}

TEST(Graph, EdgeListRoundTrip) {
  const Graph g = path_graph(6);
  EXPECT_EQ(parse_edge_list(to_edge_list(g)), g);
  std::stringstream s;
  write_edge_list(s, join(empty_graph(3), complete_graph(2)));
  EXPECT_EQ(read_edge_list(s), join(empty_graph(3), complete_graph(2)));
}

TEST(Graph, CanonicalFormIsIsomorphismInvariant) {
  const Graph p = path_graph(5);
  const std::vector<int> perm{3, 0, 4, 1, 2};
  EXPECT_EQ(canonical_form_small(p), canonical_form_small(permute(p, perm)));
  EXPECT_NE(canonical_form_small(p), canonical_form_small(complete_graph(5)));
  EXPECT_NE(canonical_form_small(empty_graph(2)), canonical_form_small(empty_graph(3)));
}

TEST(Graph, InducedSubgraphTreatsRepeatsAsNonAdjacent) {
  const Graph k3 = complete_graph(3);
  const std::vector<int> tuple{1, 1, 2};
  const Graph h = induced_subgraph(k3, tuple);
  EXPECT_FALSE(h.adjacent(0, 1));
  EXPECT_TRUE(h.adjacent(0, 2));
  EXPECT_TRUE(h.adjacent(1, 2));
}

TEST(Graph, SpecExamples) {
  const Graph k1 = complete_graph(1);
  EXPECT_EQ(disjoint_union(k1, k1), empty_graph(2));
  EXPECT_EQ(disjoint_union(complete_graph(2), k1).edge_count(), 1U);
  const Graph pp = disjoint_union(path_graph(3), path_graph(3));
  EXPECT_EQ(pp.edge_count(), 4U);
  EXPECT_EQ(connected_components(pp).size(), 2U);
  EXPECT_EQ(join(k1, k1), complete_graph(2));
  EXPECT_EQ(canonical_form_small(join(k1, empty_graph(2))), canonical_form_small(path_graph(3)));
  EXPECT_EQ(join(complete_graph(2), complete_graph(2)), complete_graph(4));
  EXPECT_EQ(canonical_form_small(complement(path_graph(4))), canonical_form_small(path_graph(4)));
  EXPECT_EQ(connected_components(complete_graph(5)).size(), 1U);
  const std::vector<int> ac{0, 2};
  EXPECT_EQ(induced_subgraph(path_graph(3), ac), empty_graph(2));
  const std::vector<int> all{0, 1, 2};
  EXPECT_EQ(induced_subgraph(complete_graph(3), all), complete_graph(3));
}

TEST(Graph, ComplementIsInvolution) {
  Rng rng(4);
  for (int round = 0; round < 20; ++round) {
    Graph g(30);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 30; ++i)
      for (int j = i + 1; j < 30; ++j)
        if (rng.bernoulli(0.3)) edges.emplace_back(i, j);
    g = Graph(30, edges);
    EXPECT_EQ(complement(complement(g)), g);
  }
}

TEST(Graph, ElevenGraphsOnFourVertices) {
  std::set<std::string> forms;
  const std::vector<std::pair<int, int>> slots{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
  for (unsigned mask = 0; mask < 64; ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t b = 0; b < slots.size(); ++b)
      if (mask >> b & 1U) edges.push_back(slots[b]);
    forms.insert(canonical_form_small(Graph(4, edges)));
  }
  EXPECT_EQ(forms.size(), 11U);
  const std::vector<std::pair<int, int>> star{{0, 1}, {0, 2}, {0, 3}};
  EXPECT_NE(canonical_form_small(Graph(4, star)), canonical_form_small(path_graph(4)));
}
