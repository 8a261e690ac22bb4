#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <sstream>

#include "cograph/errors.hpp"
#include "cograph/oracles.hpp"
#include "cograph/samplers.hpp"
#include "cograph/statistics.hpp"

using namespace cograph;

namespace {

Cotree clique(int n) {
  std::string text = "(1";
  for (int i = 1; i <= n; ++i) text += " " + std::to_string(i);
  return parse_cotree(text + ")");
}

}  // namespace

TEST(Connectivity, Examples) {
  EXPECT_EQ(vertex_connectivity(parse_cotree("(1 (0 1 2 3) (0 4 5) (0 6 7) 8)")), 5U);
  EXPECT_EQ(vertex_connectivity(clique(6)), 5U);
  EXPECT_EQ(vertex_connectivity(parse_cotree("(1 1 (0 2 3))")), 1U);
  EXPECT_EQ(vertex_connectivity(single_leaf()), 0U);
  EXPECT_THROW(vertex_connectivity(parse_cotree("(0 1 2)")), DisconnectedInput);
}

TEST(Connectivity, MatchesMinimumVertexCut) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& t : oracles::labeled_canonical_cotrees(n, Decoration::One))
      EXPECT_EQ(vertex_connectivity(t), static_cast<std::size_t>(oracles::min_vertex_cut(cograph_of(t))))
          << to_string(t);
}

TEST(Degrees, Examples) {
  const auto k = degree_distribution(clique(5));
  for (const double x : k.sorted()) EXPECT_DOUBLE_EQ(x, 4.0 / 5);
  const auto d = degree_distribution(parse_cotree("(1 1 (0 2 3))"));
  const auto p3 = d.sorted();
  ASSERT_EQ(p3.size(), 3U);
  EXPECT_DOUBLE_EQ(p3[0], 1.0 / 3);
  EXPECT_DOUBLE_EQ(p3[1], 1.0 / 3);
  EXPECT_DOUBLE_EQ(p3[2], 2.0 / 3);
}

TEST(Degrees, MeanIsEdgeDensity) {
  Rng rng(1);
  const Cotree t = sample_labeled_cotree_uniform(300, rng);
  const double n = 300;
  EXPECT_NEAR(degree_distribution(t).mean(), 2.0 * static_cast<double>(cograph_of(t).edge_count()) / (n * n), 1e-12);
}

TEST(Wasserstein, Examples) {
  EXPECT_DOUBLE_EQ(wasserstein1_vs_uniform(RealDistribution({0.0})), 0.5);
  for (const int m : {1, 4, 25}) {
    RealDistribution d;
    for (int i = 1; i <= m; ++i) d.add((2.0 * i - 1) / (2.0 * m));
    EXPECT_NEAR(wasserstein1_vs_uniform(d), 1.0 / (4 * m), 1e-12) << m;
  }
  EXPECT_THROW(wasserstein1_vs_uniform(RealDistribution{}), InvalidArgument);
}

TEST(Wasserstein, IndependentUniformSamples) {
  Rng rng(2);
  RealDistribution d;
  for (int i = 0; i < 10000; ++i) d.add(rng.uniform01());
  EXPECT_LT(wasserstein1_vs_uniform(d), 0.02);
}

TEST(TotalVariation, Examples) {
  KeyedDistribution a, b, c;
  a.add("x", 3);
  a.add("y", 1);
  b.add("x", 6);
  b.add("y", 2);
  c.add("z", 5);
  EXPECT_DOUBLE_EQ(total_variation(a, b), 0.0);
  EXPECT_DOUBLE_EQ(total_variation(a, c), 1.0);
  EXPECT_DOUBLE_EQ(a.probability("x"), 0.75);
  EXPECT_NEAR(a.standard_error("x"), std::sqrt(0.75 * 0.25 / 4), 1e-15);
}

TEST(TotalVariation, AgainstLimitLaw) {
  LimitLaw law;
  law.probabilities = {0.5L, 0.25L};
  law.tail = 0.25L;
  KeyedDistribution d;
  d.add("1", 2);
  d.add("2", 1);
  d.add("7", 1);
  EXPECT_NEAR(total_variation(d, law), 0.0, 1e-15);
  KeyedDistribution e;
  e.add("1", 1);
  EXPECT_NEAR(total_variation(e, law), 0.5, 1e-15);
}

TEST(KeyedDistribution, CsvAndMerge) {
  KeyedDistribution a, b;
  a.add("k", 1);
  b.add("k", 3);
  a.merge(b);
  EXPECT_EQ(a.count("k"), 4U);
  EXPECT_EQ(a.total(), 4U);
  std::ostringstream out;
  a.write_csv(out);
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "key,count,probability,stderr");
  std::ostringstream values;
  RealDistribution({0.5}).write_csv(values);
  EXPECT_EQ(values.str(), "value\n0.5\n");
}

TEST(ChiSquare, Basics) {
  const std::vector<std::uint64_t> flat{100, 100, 100, 100};
  const std::vector<double> uniform(4, 0.25);
  const auto r = chi_square(flat, uniform);
  EXPECT_DOUBLE_EQ(r.statistic, 0.0);
  EXPECT_EQ(r.degrees_of_freedom, 3U);
  EXPECT_DOUBLE_EQ(r.p_value, 1.0);
  KeyedDistribution d;
  d.add("a", 10);
  d.add("b", 10);
  d.add("c", 1);
  const std::vector<std::string> keys{"a", "b"};
  EXPECT_EQ(chi_square_uniform(d, keys).p_value, 0.0);
  EXPECT_NEAR(binomial_z(60, 100, 0.5), 2.0, 1e-12);
}

TEST(Density, Examples) {
  const Graph k2 = complete_graph(2);
  for (const std::size_t n : {2U, 5U, 40U})
    EXPECT_NEAR(subgraph_density(k2, complete_graph(n)), (n - 1.0) / n, 1e-12);
  EXPECT_NEAR(subgraph_density(k2, path_graph(3)), 4.0 / 9, 1e-12);
}

TEST(Density, SumsToOne) {
  Rng rng(3);
  const Graph G = cograph_of(sample_labeled_cotree_uniform(60, rng));
  for (const std::size_t k : {1U, 2U, 3U, 4U}) {
    const auto d = subgraph_densities(k, G);
    double sum = 0;
    for (const auto& [key, p] : d) sum += p;
    EXPECT_NEAR(sum, 1.0, 1e-12) << k;
  }
  EXPECT_THROW(subgraph_densities(5, G), LimitExceeded);
}

TEST(Density, MatchesBruteForceTuples) {
  Rng rng(4);
  const Graph G = cograph_of(sample_labeled_cotree_uniform(9, rng));
  std::map<std::string, double> brute;
  const int n = 9;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const std::vector<int> tuple{a, b, c};
        brute[canonical_form_small(induced_subgraph(G, tuple))] += 1.0 / (n * n * n);
      }
  const auto exact = subgraph_densities(3, G);
  ASSERT_EQ(exact.size(), brute.size());
  for (const auto& [key, p] : brute) EXPECT_NEAR(exact.at(key), p, 1e-12);
}

TEST(Density, MonteCarloAgrees) {
  Rng rng(5);
  const Graph G = cograph_of(sample_labeled_cotree_uniform(80, rng));
  const Graph p3 = path_graph(3);
  const double exact = subgraph_density(p3, G);
  const auto mc = subgraph_density_monte_carlo(p3, G, 100000, rng);
  EXPECT_LT(std::fabs(mc.value - exact), 4 * mc.standard_error + 1e-12);
}

TEST(RunTrials, IndependentOfWorkerCount) {
  const CotreeSampler sampler = [](Rng& rng) { return sample_labeled_cotree_uniform(30, rng); };
  const auto one = empirical_induced_distribution(sampler, 3, 5000, 9, 1);
  const auto four = empirical_induced_distribution(sampler, 3, 5000, 9, 4);
  EXPECT_EQ(one.counts(), four.counts());
  EXPECT_EQ(one.total(), 5000U);
  const auto d1 = empirical_vertex_degrees(sampler, 3000, 9, 1);
  const auto d3 = empirical_vertex_degrees(sampler, 3000, 9, 3);
  EXPECT_TRUE(std::equal(d1.sorted().begin(), d1.sorted().end(), d3.sorted().begin(), d3.sorted().end()));
}

TEST(RunTrials, PropagatesWorkerErrors) {
  struct Sink {
    void merge(const Sink&) {}
  };
  EXPECT_THROW(run_trials<Sink>(
                   5000, 1, [](Rng&, Sink&) { throw InvalidArgument("boom"); }, 3),
               InvalidArgument);
}

TEST(Induced, ExactSamplerMatchesEnumerationAtSmallN) {
  const int n = 5;
  const std::size_t k = 2;
  const auto trees = oracles::labeled_canonical_cotrees(n);
  const Cotree zero = parse_cotree("(0 1 2)");
  const double exact = static_cast<double>(oracles::marked_tuples_inducing(zero, n)) /
                       static_cast<double>(trees.size() * n * (n - 1));
  const CotreeSampler sampler = [](Rng& rng) { return sample_labeled_cotree_uniform(5, rng); };
  const auto d = empirical_induced_distribution(sampler, k, 100000, 10);
  EXPECT_LT(std::fabs(d.probability(canonical_encoding(zero)) - exact), 4 * d.standard_error(canonical_encoding(zero)));
}

TEST(Connectivity, EmpiricalLawUsesIntegerKeys) {
  const CotreeSampler sampler = [](Rng& rng) { return sample_labeled_cotree_uniform(10, rng, true); };
  const auto d = empirical_connectivity(sampler, 2000, 11);
  EXPECT_EQ(d.total(), 2000U);
  for (const auto& [key, count] : d.counts()) EXPECT_LT(std::stoi(key), 10);
}
