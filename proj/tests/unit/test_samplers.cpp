#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

#include "cograph/errors.hpp"
#include "cograph/oracles.hpp"
#include "cograph/samplers.hpp"
#include "cograph/statistics.hpp"

using namespace cograph;

namespace {

std::vector<std::string> encodings(const std::vector<Cotree>& trees, bool with_labels) {
  std::vector<std::string> out;
  for (const auto& t : trees) out.push_back(canonical_encoding(t, with_labels));
  return out;
}

template <class Draw>
ChiSquareResult uniformity(const std::vector<std::string>& keys, std::size_t draws, Draw&& draw) {
  KeyedDistribution d;
  for (std::size_t i = 0; i < draws; ++i) d.add(draw());
  return chi_square_uniform(d, keys);
}

}  // namespace

TEST(Samplers, SingleLeaf) {
  Rng rng(1);
  EXPECT_EQ(to_string(sample_labeled_cotree_uniform(1, rng)), "1");
  EXPECT_EQ(to_string(sample_unlabeled_cotree_uniform(1, rng)), "*");
  EXPECT_EQ(to_string(sample_boltzmann_labeled(rho_labeled(), 1, 0.0, rng)), "1");
}

TEST(Samplers, SizeTwoRootDecorationIsFair) {
  Rng rng(2);
  const std::size_t draws = 20000;
  std::size_t ones = 0;
  for (std::size_t i = 0; i < draws; ++i) {
    const Cotree t = sample_unlabeled_cotree_uniform(2, rng);
    EXPECT_EQ(t.size(), 2U);
    ones += t.decoration(t.root()) == Decoration::One;
  }
  EXPECT_LT(std::fabs(binomial_z(ones, draws, 0.5)), 4.0);
}

TEST(Samplers, Determinism) {
  for (const auto kind : {SamplerKind::LabeledExact, SamplerKind::UnlabeledExact, SamplerKind::LabeledBoltzmann,
                          SamplerKind::BinaryDecorated}) {
    SampleConfig c;
    c.n = 300;
    c.seed = 77;
    c.kind = kind;
    EXPECT_EQ(to_string(sample(c)), to_string(sample(c))) << sampler_kind_name(kind);
    EXPECT_EQ(parse_sampler_kind(sampler_kind_name(kind)), kind);
  }
  EXPECT_THROW(parse_sampler_kind("nope"), InvalidArgument);
}

TEST(Samplers, OutputsAreCanonicalAndSized) {
  Rng rng(3);
  for (const std::size_t n : {3U, 17U, 250U, 1000U}) {
    const Cotree a = sample_labeled_cotree_uniform(n, rng);
    const Cotree b = sample_unlabeled_cotree_uniform(n, rng);
    EXPECT_EQ(a.size(), n);
    EXPECT_EQ(b.size(), n);
    EXPECT_TRUE(is_canonical(a));
    EXPECT_TRUE(is_canonical(b));
    EXPECT_TRUE(a.is_labeled());
    EXPECT_FALSE(b.is_labeled());
  }
}

TEST(Samplers, ConnectedForcesRootOne) {
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const Cotree a = sample_labeled_cotree_uniform(20, rng, true);
    const Cotree b = sample_unlabeled_cotree_uniform(20, rng, true);
    EXPECT_EQ(a.decoration(a.root()), Decoration::One);
    EXPECT_EQ(b.decoration(b.root()), Decoration::One);
  }
}

TEST(Samplers, LabeledUniformAtSizeFour) {
  const auto keys = encodings(oracles::labeled_canonical_cotrees(4), true);
  ASSERT_EQ(keys.size(), 52U);
  Rng rng(5);
  const auto r = uniformity(keys, 200000, [&] { return canonical_encoding(sample_labeled_cotree_uniform(4, rng)); });
  EXPECT_GE(r.p_value, 1e-3) << r.statistic;
}

TEST(Samplers, UnlabeledUniformAtSizeFive) {
  const auto keys = encodings(oracles::unlabeled_canonical_cotrees(5), false);
  Rng rng(6);
  const auto r = uniformity(keys, 200000, [&] { return canonical_encoding(sample_unlabeled_cotree_uniform(5, rng)); });
  EXPECT_GE(r.p_value, 1e-3) << r.statistic;
}

TEST(Samplers, HighPrecisionPathIsUniform) {
  const ExactSampler labeled(true, 8, 1);
  const ExactSampler unlabeled(false, 8, 1);
  Rng rng(7);
  const auto a = uniformity(encodings(oracles::labeled_canonical_cotrees(4), true), 30000,
                            [&] { return canonical_encoding(labeled.sample(4, rng)); });
  const auto b = uniformity(encodings(oracles::unlabeled_canonical_cotrees(5), false), 30000,
                            [&] { return canonical_encoding(unlabeled.sample(5, rng)); });
  EXPECT_GE(a.p_value, 1e-3);
  EXPECT_GE(b.p_value, 1e-3);
  EXPECT_GT(labeled.fallback_count(), 0U);
  EXPECT_GT(unlabeled.fallback_count(), 0U);
}

TEST(Samplers, SamplerTooSmallThrows) {
  const ExactSampler s(true, 10);
  Rng rng(8);
  EXPECT_THROW(s.sample(11, rng), InvalidArgument);
  EXPECT_THROW(s.sample(0, rng), InvalidArgument);
}

TEST(Samplers, BoltzmannDomain) {
  EXPECT_THROW(BoltzmannSampler(rho_labeled() * 1.01L), InvalidArgument);
  EXPECT_THROW(BoltzmannSampler(0), InvalidArgument);
  const BoltzmannSampler s(rho_labeled());
  EXPECT_NEAR(static_cast<double>(s.L()), std::log(2.0), 1e-12);
  EXPECT_NEAR(static_cast<double>(boltzmann_L(0.1L)), 0.0, 0.2);
  const long double L = boltzmann_L(0.1L);
  EXPECT_NEAR(static_cast<double>(2 * L - std::exp(L) + 1), 0.1, 1e-15);
}

TEST(Samplers, BoltzmannConditionedOnSizeIsUniform) {
  const auto keys = encodings(oracles::labeled_canonical_cotrees(4), true);
  Rng rng(9);
  const BoltzmannSampler s(rho_labeled());
  const auto r = uniformity(keys, 100000, [&] { return canonical_encoding(s.sample(4, 0.0, rng)); });
  EXPECT_GE(r.p_value, 1e-3) << r.statistic;
}

TEST(Samplers, BoltzmannWindowAndCap) {
  Rng rng(10);
  const BoltzmannSampler s(rho_labeled());
  for (int i = 0; i < 20; ++i) {
    const Cotree t = s.sample(200, 0.1, rng);
    EXPECT_GE(t.size(), 180U);
    EXPECT_LE(t.size(), 220U);
    EXPECT_TRUE(is_canonical(t));
  }
  EXPECT_THROW(s.sample(5000, 0.0, rng, 3), IterationCapExceeded);
}

TEST(Samplers, BinaryRootDecorationBias) {
  Rng rng(11);
  const std::size_t draws = 20000;
  std::size_t zeros = 0;
  for (std::size_t i = 0; i < draws; ++i)
    zeros += sample_binary_decorated(2, 0.3, rng).to_string().starts_with("(0");
  EXPECT_LT(std::fabs(binomial_z(zeros, draws, 0.3)), 4.0);
}

TEST(Samplers, BinaryPlaneTreesUniform) {
  const auto keys = oracles::decorated_plane_binary_trees(3);
  Rng rng(12);
  const auto r = uniformity(keys, 100000, [&] { return sample_binary_decorated(3, 0.5, rng).to_string(); });
  EXPECT_GE(r.p_value, 1e-3) << r.statistic;
}
