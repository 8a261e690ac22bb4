#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "cograph/enumeration.hpp"
#include "cograph/oracles.hpp"
#include "cograph/statistics.hpp"

using namespace cograph;

TEST(Enumeration, LabeledTreeCounts) {
  const auto l = labeled_tree_counts(7);
  const std::vector<long> expected{0, 1, 1, 4, 26, 236, 2752, 39208};
  for (std::size_t n = 0; n < expected.size(); ++n) EXPECT_EQ(l[n], expected[n]) << n;
  const auto m = labeled_cograph_counts(7);
  EXPECT_EQ(m[1], 1);
  EXPECT_EQ(m[4], 52);
  EXPECT_EQ(m[4], 2 * (1 + 6 + 4 + 12 + 3));
  for (int n = 1; n <= 6; ++n)
    EXPECT_EQ(m[static_cast<std::size_t>(n)], oracles::labeled_canonical_cotrees(n).size()) << n;
}

TEST(Enumeration, SeriesLAndM) {
  const auto L = series_L(30);
  EXPECT_EQ(L[0], 0);
  const auto z = TruncatedSeries::z(30);
  EXPECT_EQ(L.exp() - TruncatedSeries::constant(1, 30), mpq_class(2) * L - z);
  EXPECT_EQ(series_M(30), mpq_class(2) * L - z);
}

TEST(Enumeration, UnlabeledCounts) {
  const auto u = unlabeled_tree_counts(7);
  const std::vector<long> expected{0, 1, 1, 2, 5};
  for (std::size_t n = 1; n < expected.size(); ++n) EXPECT_EQ(u[n], expected[n]);
  for (int n = 1; n <= 7; ++n)
    EXPECT_EQ(u[static_cast<std::size_t>(n)], oracles::unlabeled_tree_shapes(n).size()) << n;
  const auto v = unlabeled_cograph_counts(7);
  EXPECT_EQ(v[1], 1);
  EXPECT_EQ(v[4], 10);
  for (int n = 1; n <= 6; ++n)
    EXPECT_EQ(v[static_cast<std::size_t>(n)], oracles::unlabeled_canonical_cotrees(n).size()) << n;
}

TEST(Enumeration, SeriesUAgreesWithCounts) {
  const auto U = series_U(40);
  const auto u = unlabeled_tree_counts(40);
  for (std::size_t n = 0; n <= 40; ++n) EXPECT_EQ(U[n], u[n]) << n;
}

TEST(Enumeration, DSeries) {
  const auto D = series_D(8);
  EXPECT_EQ(D[0], 0);
  EXPECT_EQ(D[1], 0);
  for (int n = 2; n <= 6; ++n)
    EXPECT_EQ(D.egf_count(static_cast<std::size_t>(n)), oracles::no_fixed_root_child_pairs(n)) << n;
  const auto U = series_U(8);
  for (int n = 1; n <= 6; ++n)
    EXPECT_EQ(U.egf_count(static_cast<std::size_t>(n)), oracles::tree_automorphism_pairs(n)) << n;
}

TEST(Enumeration, MarkedLabeledSeries) {
  const auto s = series_marked_labeled(8);
  EXPECT_EQ(s.Leven[0], 1);
  EXPECT_EQ(s.Lodd[0], 0);
  EXPECT_EQ(s.Leven + s.Lodd, s.Lprime);
  for (int n = 0; n <= 5; ++n) {
    const auto b = oracles::labeled_blossom_counts(n);
    const auto i = static_cast<std::size_t>(n);
    EXPECT_EQ(s.Lprime.egf_count(i), b.total) << n;
    EXPECT_EQ(s.Leven.egf_count(i), b.even) << n;
    EXPECT_EQ(s.Lodd.egf_count(i), b.odd) << n;
  }
}

TEST(Enumeration, MarkedUnlabeledSeries) {
  const auto s = series_marked_unlabeled(8);
  EXPECT_EQ(s.Ustar[0], 1);
  EXPECT_EQ(s.Uodd[0], 0);
  EXPECT_EQ(s.Ueven + s.Uodd, s.Ustar);
  for (int n = 0; n <= 5; ++n) {
    const auto b = oracles::fixed_blossom_counts(n);
    const auto i = static_cast<std::size_t>(n);
    EXPECT_EQ(s.Ustar.egf_count(i), b.total) << n;
    EXPECT_EQ(s.Ueven.egf_count(i), b.even) << n;
    EXPECT_EQ(s.Uodd.egf_count(i), b.odd) << n;
  }
}

TEST(Enumeration, FixedPointsSolveTheirEquations) {
  const auto B = series_L(10);
  const auto S = star_fixed_point(B);
  const auto one = TruncatedSeries::constant(1, 10);
  EXPECT_EQ(S, one + S * B);
  const auto [E, O] = even_odd_fixed_point(B);
  EXPECT_EQ(E, one + O * B);
  EXPECT_EQ(O, E * B);
}

class MarkedTrees : public ::testing::TestWithParam<const char*> {};

TEST_P(MarkedTrees, LabeledCountsMatchBruteForce) {
  const Cotree t0 = parse_cotree(GetParam());
  const auto series = series_Mt0(t0, 6);
  for (int n = static_cast<int>(t0.size()); n <= 5; ++n)
    EXPECT_EQ(series.egf_count(static_cast<std::size_t>(n)), oracles::marked_tuples_inducing(t0, n)) << n;
}

TEST_P(MarkedTrees, UnlabeledCountsMatchBruteForce) {
  const Cotree t0 = parse_cotree(GetParam());
  const auto series = series_Vt0(t0, 6);
  for (int n = static_cast<int>(t0.size()); n <= 5; ++n)
    EXPECT_EQ(series.egf_count(static_cast<std::size_t>(n)), oracles::fixed_marked_tuples_inducing(t0, n)) << n;
}

INSTANTIATE_TEST_SUITE_P(Small, MarkedTrees,
                         ::testing::Values("1", "(0 1 2)", "(1 1 2)", "(1 1 (0 2 3))", "(0 (1 1 3) 2)",
                                           "(1 1 2 3)"));

TEST(Enumeration, Radii) {
  EXPECT_NEAR(static_cast<double>(rho_labeled()), 0.3862943611, 1e-10);
  // Coefficients decay like n^(-3/2), so the truncation error at the radius
  // shrinks like N^(-1/2).
  const double gap200 = std::log(2.0) - static_cast<double>(series_L(200).evaluate(rho_labeled()));
  const double gap800 = std::log(2.0) - static_cast<double>(series_L(800).evaluate(rho_labeled()));
  EXPECT_GT(gap800, 0);
  EXPECT_LT(gap800, 0.015);
  EXPECT_NEAR(gap200 / gap800, 2.0, 0.1);
  EXPECT_NEAR(static_cast<double>(series_M(800).evaluate(rho_labeled())), 1.0, 2 * gap800 + 1e-12);

  const long double r200 = rho_unlabeled(200);
  const long double r400 = rho_unlabeled(400);
  const long double r800 = rho_unlabeled(800);
  EXPECT_NEAR(static_cast<double>(r400), 0.2808, 1e-3);
  EXPECT_LT(std::fabs(r800 - r400), std::fabs(r400 - r200));
  const auto U = series_U(400);
  EXPECT_NEAR(static_cast<double>(2 * U.evaluate(r400) - r400 - 1), 0.0, 1e-9);
  const long double precise = rho_unlabeled_precise();
  EXPECT_NEAR(static_cast<double>(precise), 0.2808, 1e-4);
  EXPECT_LT(std::fabs(precise - r800), std::fabs(precise - r400));
}

TEST(Enumeration, LimitLaws) {
  const auto pi = pi_distribution(60);
  EXPECT_NEAR(static_cast<double>(pi.probabilities[0]), 0.386294, 1e-6);
  EXPECT_NEAR(static_cast<double>(pi.probabilities[1]), 0.149224, 1e-6);
  long double sum = pi.tail;
  for (const auto p : pi.probabilities) sum += p;
  EXPECT_NEAR(static_cast<double>(sum), 1.0, 1e-12);

  const auto piu = pi_u_distribution(60);
  sum = piu.tail;
  for (const auto p : piu.probabilities) sum += p;
  EXPECT_NEAR(static_cast<double>(sum), 1.0, 1e-12);
  EXPECT_GT(piu.tail, 0);
}

TEST(Enumeration, KappaLawMatchesEnumeration) {
  for (int n = 2; n <= 6; ++n) {
    std::map<std::size_t, double> counts;
    const auto trees = oracles::labeled_canonical_cotrees(n, Decoration::One);
    for (const auto& t : trees) counts[vertex_connectivity(t)] += 1;
    const auto law = kappa_law_labeled(static_cast<std::size_t>(n));
    ASSERT_EQ(law.size(), static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < law.size(); ++j)
      EXPECT_NEAR(static_cast<double>(law[j]), counts[j] / static_cast<double>(trees.size()), 1e-12) << n << " " << j;
  }
  for (int n = 2; n <= 6; ++n) {
    std::map<std::size_t, double> counts;
    std::size_t connected = 0;
    for (const auto& t : oracles::unlabeled_canonical_cotrees(n)) {
      if (t.decoration(t.root()) != Decoration::One) continue;
      counts[vertex_connectivity(t)] += 1;
      ++connected;
    }
    const auto law = kappa_law_unlabeled(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < law.size(); ++j)
      EXPECT_NEAR(static_cast<double>(law[j]), counts[j] / static_cast<double>(connected), 1e-12) << n << " " << j;
  }
}
