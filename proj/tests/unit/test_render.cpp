#include <gtest/gtest.h>

#include <string>

#include "cograph/errors.hpp"
#include "cograph/render.hpp"
#include "cograph/samplers.hpp"

using namespace cograph;

TEST(Render, CherryImages) {
  const auto k2 = adjacency_image(parse_cotree("(1 1 2)"));
  EXPECT_EQ(k2.width, 2U);
  EXPECT_EQ(k2.pixels, (std::vector<std::uint8_t>{255, 0, 0, 255}));
  const auto e2 = adjacency_image(parse_cotree("(0 1 2)"));
  for (const auto p : e2.pixels) EXPECT_EQ(p, 255);
}

TEST(Render, SymmetricAndMatchesDfsAdjacency) {
  Rng rng(1);
  const Cotree t = sample_labeled_cotree_uniform(120, rng);
  const auto img = adjacency_image(t);
  const Graph g = cograph_in_dfs_order(t);
  for (std::size_t i = 0; i < img.height; ++i)
    for (std::size_t j = 0; j < img.width; ++j) {
      EXPECT_EQ(img.at(i, j), img.at(j, i));
      EXPECT_EQ(img.at(i, j) == 0, g.adjacent(i, j));
    }
}

TEST(Render, PgmRoundTrip) {
  Rng rng(2);
  const auto img = adjacency_image(sample_unlabeled_cotree_uniform(33, rng));
  const std::string bytes = to_pgm(img);
  EXPECT_TRUE(bytes.starts_with("P5\n33 33\n255\n"));
  EXPECT_EQ(parse_pgm(bytes), img);
  EXPECT_EQ(parse_pgm("P5 # note\n2 1\n# more\n255\n\x01\x02").pixels, (std::vector<std::uint8_t>{1, 2}));
  EXPECT_THROW(parse_pgm("P2\n1 1\n255\n0"), ParseError);
  EXPECT_THROW(parse_pgm("P5\n2 2\n255\n\x01"), ParseError);
}

TEST(Render, SizeCap) {
  std::string text = "(1";
  for (std::size_t i = 1; i <= kMaxImageSide + 1; ++i) text += " " + std::to_string(i);
  EXPECT_THROW(adjacency_image(parse_cotree(text + ")")), LimitExceeded);
}
