#include <gtest/gtest.h>

#include <algorithm>

#include "cograph/binary_tree.hpp"
#include "cograph/oracles.hpp"

using namespace cograph;

TEST(BinaryTree, ParseAndPrint) {
  const auto b = parse_plane_binary_tree("(0 (1 3 1) 2)");
  EXPECT_EQ(b.to_string(), "(0 (1 3 1) 2)");
  EXPECT_EQ(b.leaf_count(), 3U);
  const std::vector<int> order = b.leaves_in_order();
  EXPECT_EQ(b.label(order[0]), 3);
  EXPECT_EQ(b.label(order[2]), 2);
}

TEST(BinaryTree, SamplerSmallSizes) {
  Rng rng(1);
  EXPECT_EQ(sample_binary_decorated(1, 0.5, rng).to_string(), "1");
  for (int i = 0; i < 20; ++i) {
    EXPECT_TRUE(sample_binary_decorated(2, 1.0, rng).to_string().starts_with("(0"));
    EXPECT_TRUE(sample_binary_decorated(2, 0.0, rng).to_string().starts_with("(1"));
  }
}

TEST(BinaryTree, FlipOnRightLeafOfCherry) {
  const auto b = parse_plane_binary_tree("(0 1 2)");
  EXPECT_EQ(flip_involution(b, b.leaf_with_label(2)).to_string(), "(1 1 2)");
  EXPECT_EQ(flip_involution(b, b.leaf_with_label(1)), b);
}

TEST(BinaryTree, FlipLeftmostLeafIsIdentity) {
  Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    const auto b = sample_binary_decorated(9, 0.5, rng);
    EXPECT_EQ(flip_involution(b, b.leaves_in_order().front()), b);
  }
}

TEST(BinaryTree, FlipIsAnInvolution) {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto b = sample_binary_decorated(12, 0.5, rng);
    for (const int leaf : b.leaves_in_order()) {
      const auto f = flip_involution(b, leaf);
      EXPECT_EQ(flip_involution(f, leaf), b);
      EXPECT_EQ(without_labels(f.to_cotree()).node_count(), b.node_count());
    }
  }
}

TEST(BinaryTree, RankOrderExtremes) {
  const auto zeros = parse_plane_binary_tree("(0 (0 4 2) (0 1 3))");
  const auto ones = parse_plane_binary_tree("(1 (1 4 2) (1 1 3))");
  EXPECT_EQ(rank_order(zeros), zeros.leaves_in_order());
  auto reversed = ones.leaves_in_order();
  std::reverse(reversed.begin(), reversed.end());
  EXPECT_EQ(rank_order(ones), reversed);
}

TEST(BinaryTree, DegreeIsRankInFlippedTreeMinusOne) {
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    const auto b = sample_binary_decorated(15, 0.5, rng);
    const Graph g = cograph_of(b.to_cotree());
    for (const int leaf : b.leaves_in_order()) {
      const std::size_t degree = g.degree(static_cast<std::size_t>(b.label(leaf) - 1));
      EXPECT_EQ(binary_leaf_degree(b, leaf), degree);
      EXPECT_EQ(rank_of(flip_involution(b, leaf), leaf) - 1, degree);
    }
  }
}

TEST(BinaryTree, ExhaustiveDegreeUniformityAtThreeLeaves) {
  const auto trees = oracles::decorated_plane_binary_trees(3);
  ASSERT_EQ(trees.size(), 48U);
  std::vector<int> histogram(3);
  for (const auto& text : trees) {
    const auto b = parse_plane_binary_tree(text);
    for (const int leaf : b.leaves_in_order()) ++histogram[binary_leaf_degree(b, leaf)];
  }
  EXPECT_EQ(histogram, (std::vector<int>{48, 48, 48}));
}

TEST(BinaryTree, InsertLeafKeepsPlaneOrder) {
  auto b = PlaneBinaryTree::single_leaf();
  b.insert_leaf(b.root(), false, Decoration::Zero);
  EXPECT_EQ(b.to_string(), "(0 1 2)");
  b.insert_leaf(b.leaf_with_label(1), true, Decoration::One);
  EXPECT_EQ(b.to_string(), "(0 (1 3 1) 2)");
}
