#include "cograph/checks.hpp"

#include <boost/math/tools/minima.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "cograph/binary_tree.hpp"
#include "cograph/enumeration.hpp"
#include "cograph/errors.hpp"
#include "cograph/oracles.hpp"
#include "cograph/render.hpp"
#include "cograph/samplers.hpp"
#include "cograph/statistics.hpp"

namespace cograph {

using nlohmann::json;

namespace {

Measurement measure(std::string metric, double value, std::string relation, double threshold) {
  bool pass = false;
  if (relation == "<=") pass = value <= threshold;
  if (relation == ">=") pass = value >= threshold;
  if (relation == ">") pass = value > threshold;
  if (relation == "==") pass = value == threshold;
  return {std::move(metric), value, std::move(relation), threshold, pass};
}

Measurement mismatches(std::string metric, std::size_t count) {
  return measure(std::move(metric), static_cast<double>(count), "==", 0);
}

template <class T>
T param(const json& p, const char* key, T fallback) {
  return p.contains(key) ? p.at(key).get<T>() : fallback;
}

std::uint64_t seed_of(const json& p) { return param<std::uint64_t>(p, "seed", 20240601); }
unsigned workers_of(const json& p) { return param<unsigned>(p, "workers", 0); }

mpz_class factorial(std::size_t n) {
  mpz_class f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

CheckReport exact_counts(const json& p) {
  CheckReport r;
  const auto expected_l = param<std::vector<long>>(p, "labeled_tree_counts", {1, 1, 4, 26, 236, 2752});
  const auto l = labeled_tree_counts(expected_l.size());
  std::size_t bad = 0;
  for (std::size_t i = 0; i < expected_l.size(); ++i) bad += l[i + 1] != expected_l[i];
  r.measurements.push_back(mismatches("labeled tree counts vs table", bad));

  const auto m4 = param<long>(p, "m4", 52);
  r.measurements.push_back(measure("m_4", labeled_cograph_counts(4)[4].get_d(), "==", static_cast<double>(m4)));
  r.measurements.push_back(
      measure("m_4 by enumeration", static_cast<double>(oracles::labeled_canonical_cotrees(4).size()), "==",
              static_cast<double>(m4)));
  const auto v4 = param<long>(p, "v4", 10);
  r.measurements.push_back(measure("v_4", unlabeled_cograph_counts(4)[4].get_d(), "==", static_cast<double>(v4)));
  r.measurements.push_back(
      measure("v_4 by enumeration", static_cast<double>(oracles::unlabeled_canonical_cotrees(4).size()), "==",
              static_cast<double>(v4)));

  const auto max_u = param<std::size_t>(p, "unlabeled_max_n", 7);
  const auto u = unlabeled_tree_counts(max_u);
  bad = 0;
  for (std::size_t n = 1; n <= max_u; ++n)
    bad += u[n] != static_cast<unsigned long>(oracles::unlabeled_tree_shapes(static_cast<int>(n)).size());
  r.measurements.push_back(mismatches("u_n vs enumeration, n <= " + std::to_string(max_u), bad));

  const auto max_l = param<std::size_t>(p, "labeled_max_n", 6);
  const auto m = labeled_cograph_counts(max_l);
  bad = 0;
  for (std::size_t n = 1; n <= max_l; ++n)
    bad += m[n] != static_cast<unsigned long>(oracles::labeled_canonical_cotrees(static_cast<int>(n)).size());
  r.measurements.push_back(mismatches("m_n vs enumeration, n <= " + std::to_string(max_l), bad));
  return r;
}

std::size_t differing(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t N = std::min(a.order(), b.order());
  std::size_t bad = 0;
  for (std::size_t n = 0; n <= N; ++n) bad += a[n] != b[n];
  return bad;
}

CheckReport series_identities(const json& p) {
  CheckReport r;
  const auto N = param<std::size_t>(p, "order", 200);
  const auto one = TruncatedSeries::constant(1, N);
  const auto z = TruncatedSeries::z(N);

  const TruncatedSeries L = series_L(N);
  const TruncatedSeries eL = L.exp();
  r.measurements.push_back(mismatches("e^L - 1 vs 2L - z", differing(eL - one, L * mpq_class(2) - z)));
  r.measurements.push_back(mismatches("L vs z + e^L - 1 - L", differing(L, z + eL - one - L)));

  const MarkedLabeledSeries marked = series_marked_labeled(N);
  const auto [even, odd] = even_odd_fixed_point(eL - one);
  r.measurements.push_back(mismatches("L^even implicit vs closed form", differing(even, marked.Leven)));
  r.measurements.push_back(mismatches("L^odd implicit vs closed form", differing(odd, marked.Lodd)));
  r.measurements.push_back(mismatches("L^even + L^odd vs L'", differing(marked.Leven + marked.Lodd, marked.Lprime)));

  // U from the Euler transform alone, D from its definition.
  const auto u = unlabeled_tree_counts(N);
  TruncatedSeries U(N);
  for (std::size_t n = 1; n <= N; ++n) U.set(n, mpq_class(u[n]));
  TruncatedSeries higher(N);
  for (std::size_t rr = 2; rr <= N; ++rr) higher += U.substitute_power(rr) * mpq_class(1, static_cast<unsigned long>(rr));
  const TruncatedSeries D = higher.exp() - one;
  r.measurements.push_back(mismatches("D vs exp(sum_{r>=2} U(z^r)/r) - 1", differing(series_D(N), D)));

  const TruncatedSeries eU = U.exp();
  r.measurements.push_back(
      mismatches("U vs z + exp_{>=2}(U) + D exp(U)", differing(U, z + (eU - one - U) + D * eU)));

  const TruncatedSeries B = (eU - one) + D * eU;
  const MarkedUnlabeledSeries mu = series_marked_unlabeled(N);
  r.measurements.push_back(mismatches("U* vs 1 + U* exp_{>=1}(U) + U* D exp(U)", differing(mu.Ustar, one + mu.Ustar * B)));
  r.measurements.push_back(mismatches("U^even vs 1 + U^odd B", differing(mu.Ueven, one + mu.Uodd * B)));
  r.measurements.push_back(mismatches("U^odd vs U^even B", differing(mu.Uodd, mu.Ueven * B)));
  r.measurements.push_back(mismatches("U* vs U^even + U^odd", differing(mu.Ustar, mu.Ueven + mu.Uodd)));
  return r;
}

CheckReport marked_series(const json& p) {
  CheckReport r;
  const auto max_n = param<int>(p, "max_n", 6);
  const auto trees = param<std::vector<std::string>>(p, "t0", {"(0 1 2)", "(1 1 2)"});
  for (const auto& text : trees) {
    const Cotree t0 = parse_cotree(text);
    const auto M = series_Mt0(t0, static_cast<std::size_t>(max_n));
    const auto V = series_Vt0(t0, static_cast<std::size_t>(max_n));
    std::size_t bad_m = 0, bad_v = 0;
    for (int n = 1; n <= max_n; ++n) {
      const mpz_class f = factorial(static_cast<std::size_t>(n));
      bad_m += mpq_class(M[static_cast<std::size_t>(n)] * f) != oracles::marked_tuples_inducing(t0, n);
      bad_v += mpq_class(V[static_cast<std::size_t>(n)] * f) != oracles::fixed_marked_tuples_inducing(t0, n);
    }
    r.measurements.push_back(mismatches("M_t0 vs enumeration, t0 = " + text, bad_m));
    r.measurements.push_back(mismatches("V_t0 vs enumeration, t0 = " + text, bad_v));
  }
  return r;
}

CheckReport radius(const json& p) {
  CheckReport r;
  // z = 2L - e^L + 1 inverts L(z); the radius is where this map turns.
  const auto turn = boost::math::tools::brent_find_minima(
      [](long double L) { return -(2 * L - std::exp(L) + 1); }, 0.0L, 1.0L, std::numeric_limits<long double>::digits);
  r.measurements.push_back(measure("|rho - max_L (2L - e^L + 1)|",
                                   static_cast<double>(std::fabs(rho_labeled() + turn.second)), "<=",
                                   param<double>(p, "labeled_tolerance", 1e-15)));
  const auto N = param<std::size_t>(p, "order", 400);
  const double target = param<double>(p, "unlabeled_target", 0.2808);
  r.measurements.push_back(measure("|rho_u(N) - " + std::to_string(target) + "|",
                                   std::fabs(static_cast<double>(rho_unlabeled(N)) - target), "<=",
                                   param<double>(p, "unlabeled_tolerance", 1e-3)));
  return r;
}

template <class Draw>
KeyedDistribution draw_keys(std::size_t trials, std::uint64_t seed, unsigned workers, Draw draw) {
  return run_trials<KeyedDistribution>(trials, seed, [&](Rng& rng, KeyedDistribution& out) { out.add(draw(rng)); },
                                       workers);
}

std::vector<std::string> encodings(const std::vector<Cotree>& trees) {
  std::vector<std::string> out;
  for (const auto& t : trees) out.push_back(canonical_encoding(t));
  return out;
}

CheckReport uniformity_small_n(const json& p) {
  CheckReport r;
  const auto n = param<int>(p, "n", 4);
  const auto trials = param<std::size_t>(p, "trials", 1'000'000);
  const auto alpha = param<double>(p, "significance", 1e-3);
  const auto seed = seed_of(p);
  const auto workers = workers_of(p);
  auto add = [&](const std::string& name, const KeyedDistribution& d, const std::vector<std::string>& keys) {
    const auto chi = chi_square_uniform(d, keys);
    r.measurements.push_back(measure(name + " chi-square p-value over " + std::to_string(keys.size()) + " outcomes",
                                     chi.p_value, ">=", alpha));
  };

  const auto nn = static_cast<std::size_t>(n);
  const auto labeled = encodings(oracles::labeled_canonical_cotrees(n));
  add("labeled exact", draw_keys(trials, seed, workers, [&](Rng& rng) {
        return canonical_encoding(sample_labeled_cotree_uniform(nn, rng));
      }), labeled);
  const auto unlabeled = encodings(oracles::unlabeled_canonical_cotrees(n));
  add("unlabeled exact", draw_keys(trials, seed + 1, workers, [&](Rng& rng) {
        return canonical_encoding(sample_unlabeled_cotree_uniform(nn, rng));
      }), unlabeled);

  // Same laws through the high-precision path only.
  const auto exact_trials = param<std::size_t>(p, "exact_path_trials", 100'000);
  const ExactSampler exact_labeled(true, nn, 1.0L);
  const ExactSampler exact_unlabeled(false, nn, 1.0L);
  add("labeled exact (320-bit path)", draw_keys(exact_trials, seed + 2, workers, [&](Rng& rng) {
        return canonical_encoding(exact_labeled.sample(nn, rng));
      }), labeled);
  add("unlabeled exact (320-bit path)", draw_keys(exact_trials, seed + 3, workers, [&](Rng& rng) {
        return canonical_encoding(exact_unlabeled.sample(nn, rng));
      }), unlabeled);

  const auto boltzmann_trials = param<std::size_t>(p, "boltzmann_trials", 200'000);
  const BoltzmannSampler boltzmann(rho_labeled());
  add("Boltzmann at exact size", draw_keys(boltzmann_trials, seed + 4, workers, [&](Rng& rng) {
        return canonical_encoding(boltzmann.sample(nn, 0.0, rng));
      }), labeled);

  const double bias = param<double>(p, "p", 0.5);
  for (const auto k : param<std::vector<int>>(p, "binary_k", {3, 4})) {
    const auto plane = oracles::decorated_plane_binary_trees(k);
    add("decorated plane binary k=" + std::to_string(k), draw_keys(trials, seed + 10 + k, workers, [&](Rng& rng) {
          return sample_binary_decorated(static_cast<std::size_t>(k), bias, rng).to_string();
        }), plane);
    // Forgetting the plane structure.
    std::map<std::string, std::size_t> cotrees;
    for (const auto& text : plane) ++cotrees[canonical_encoding(parse_cotree(text))];
    std::vector<std::string> keys;
    for (const auto& [key, count] : cotrees) keys.push_back(key);
    add("binary cotree k=" + std::to_string(k), draw_keys(trials, seed + 20 + k, workers, [&](Rng& rng) {
          return canonical_encoding(sample_binary_decorated(static_cast<std::size_t>(k), bias, rng).to_cotree());
        }), keys);
  }
  return r;
}

CheckReport degree_law(const json& p) {
  CheckReport r;
  const auto k = param<int>(p, "exhaustive_k", 3);
  const auto plane = oracles::decorated_plane_binary_trees(k);
  std::map<std::pair<int, std::size_t>, std::size_t> by_label;
  std::size_t rank_mismatch = 0;
  for (const auto& text : plane) {
    const PlaneBinaryTree b = parse_plane_binary_tree(text);
    const auto degrees = degree_vector(b.to_cotree());
    for (int label = 1; label <= k; ++label) {
      const int leaf = b.leaf_with_label(label);
      const auto degree = static_cast<std::size_t>(degrees[static_cast<std::size_t>(label - 1)]);
      ++by_label[{label, degree}];
      rank_mismatch += degree != rank_of(flip_involution(b, leaf), leaf) - 1;
      rank_mismatch += degree != binary_leaf_degree(b, leaf);
    }
  }
  std::size_t uneven = 0;
  const std::size_t per_cell = plane.size() / static_cast<std::size_t>(k);
  for (int label = 1; label <= k; ++label)
    for (std::size_t d = 0; d < static_cast<std::size_t>(k); ++d)
      uneven += by_label[{label, d}] != per_cell;
  r.measurements.push_back(measure("decorated plane binary trees, k=" + std::to_string(k), static_cast<double>(plane.size()),
                                   "==", param<double>(p, "exhaustive_count", 48)));
  r.measurements.push_back(mismatches("(leaf, degree) cells off " + std::to_string(per_cell), uneven));
  r.measurements.push_back(mismatches("degree vs flipped rank - 1", rank_mismatch));

  const auto n = param<std::size_t>(p, "n", 200);
  const auto trials = param<std::size_t>(p, "trials", 1'000'000);
  const double bias = param<double>(p, "p", 0.5);
  const auto degrees = run_trials<KeyedDistribution>(
      trials, seed_of(p),
      [&](Rng& rng, KeyedDistribution& out) {
        const PlaneBinaryTree b = sample_binary_decorated(n, bias, rng);
        const int leaf = b.leaf_with_label(static_cast<int>(rng.below(n)) + 1);
        out.add(std::to_string(binary_leaf_degree(b, leaf)));
      },
      workers_of(p));
  std::vector<std::string> keys;
  for (std::size_t d = 0; d < n; ++d) keys.push_back(std::to_string(d));
  r.measurements.push_back(measure("degree chi-square p-value, n=" + std::to_string(n),
                                   chi_square_uniform(degrees, keys).p_value, ">=",
                                   param<double>(p, "significance", 1e-3)));
  return r;
}

CheckReport degree_wasserstein(const json& p) {
  CheckReport r;
  const auto n = param<std::size_t>(p, "n", 10'000);
  const auto trials = param<std::size_t>(p, "trials", 1000);
  const auto tol = param<double>(p, "tolerance", 0.05);
  const auto seed = seed_of(p);
  const auto labeled = empirical_vertex_degrees([n](Rng& rng) { return sample_labeled_cotree_uniform(n, rng); }, trials,
                                                seed, workers_of(p));
  r.measurements.push_back(measure("labeled W1", wasserstein1_vs_uniform(labeled), "<=", tol));
  const auto unlabeled = empirical_vertex_degrees([n](Rng& rng) { return sample_unlabeled_cotree_uniform(n, rng); },
                                                  trials, seed + 1, workers_of(p));
  r.measurements.push_back(measure("unlabeled W1", wasserstein1_vs_uniform(unlabeled), "<=", tol));
  return r;
}

std::vector<std::string> binary_cotrees_on_three() {
  std::vector<std::string> out;
  for (const char* shape : {"(%a (%b 1 2) 3)", "(%a (%b 1 3) 2)", "(%a (%b 2 3) 1)"})
    for (const char a : {'0', '1'})
      for (const char b : {'0', '1'}) {
        std::string text = shape;
        text.replace(text.find("%a"), 2, 1, a);
        text.replace(text.find("%b"), 2, 1, b);
        out.push_back(canonical_encoding(parse_cotree(text)));
      }
  return out;
}

CheckReport induced_subtrees(const json& p) {
  CheckReport r;
  const auto n = param<std::size_t>(p, "n", 2000);
  const auto k = param<std::size_t>(p, "k", 3);
  const auto trials = param<std::size_t>(p, "trials", 100'000);
  const auto tol = param<double>(p, "bucket_tolerance", 0.01);
  const auto max_other = param<double>(p, "non_binary_mass", 0.05);
  const auto keys = binary_cotrees_on_three();
  const double target = 1.0 / static_cast<double>(keys.size());
  const std::pair<const char*, CotreeSampler> classes[] = {
      {"labeled", [n](Rng& rng) { return sample_labeled_cotree_uniform(n, rng); }},
      {"unlabeled", [n](Rng& rng) { return sample_unlabeled_cotree_uniform(n, rng); }},
  };
  std::uint64_t seed = seed_of(p);
  for (const auto& [name, sampler] : classes) {
    const auto d = empirical_induced_distribution(sampler, k, trials, seed++, workers_of(p));
    double worst = 0;
    double binary = 0;
    for (const auto& key : keys) {
      worst = std::max(worst, std::abs(d.probability(key) - target));
      binary += d.probability(key);
    }
    r.measurements.push_back(measure(std::string(name) + " max |bucket - 1/12|", worst, "<=", tol));
    r.measurements.push_back(measure(std::string(name) + " non-binary mass", 1 - binary, "<=", max_other));
  }
  return r;
}

CheckReport connectivity_law(const json& p) {
  CheckReport r;
  const auto n = param<std::size_t>(p, "n", 2000);
  const auto trials = param<std::size_t>(p, "trials", 100'000);
  const auto jmax = param<std::size_t>(p, "jmax", 60);
  const auto tol = param<double>(p, "tolerance", 0.02);
  const auto seed = seed_of(p);
  const auto labeled = empirical_connectivity(
      [n](Rng& rng) { return sample_labeled_cotree_uniform(n, rng, true); }, trials, seed, workers_of(p));
  const LimitLaw pi = pi_distribution(jmax);
  r.measurements.push_back(measure("labeled TV to pi", total_variation(labeled, pi), "<=", tol));
  const auto unlabeled = empirical_connectivity(
      [n](Rng& rng) { return sample_unlabeled_cotree_uniform(n, rng, true); }, trials, seed + 1, workers_of(p));
  r.measurements.push_back(measure("unlabeled TV to pi^u", total_variation(unlabeled, pi_u_distribution(jmax)), "<=", tol));
  long double mass = 0;
  for (const auto x : pi.probabilities) mass += x;
  r.measurements.push_back(measure("sum_{j<=" + std::to_string(jmax) + "} pi_j", static_cast<double>(mass), ">",
                                   param<double>(p, "min_mass", 0.99)));
  return r;
}

CheckReport connectivity_probability(const json& p) {
  CheckReport r;
  const auto n = param<std::size_t>(p, "n", 20);
  const auto trials = param<std::size_t>(p, "trials", 1'000'000);
  const auto sigmas = param<double>(p, "sigmas", 4);
  const auto seed = seed_of(p);
  auto root_one = [&](auto sample, std::uint64_t s) {
    const auto d = draw_keys(trials, s, workers_of(p), [&](Rng& rng) {
      return sample(rng).decoration(0) == Decoration::One ? std::string("1") : std::string("0");
    });
    return std::abs(binomial_z(d.count("1"), d.total(), 0.5));
  };
  r.measurements.push_back(measure("labeled |z| of root = 1",
                                   root_one([n](Rng& rng) { return sample_labeled_cotree_uniform(n, rng); }, seed), "<=",
                                   sigmas));
  r.measurements.push_back(measure("unlabeled |z| of root = 1",
                                   root_one([n](Rng& rng) { return sample_unlabeled_cotree_uniform(n, rng); }, seed + 1),
                                   "<=", sigmas));
  return r;
}

CheckReport vertex_connectivity_oracle(const json& p) {
  CheckReport r;
  const auto max_n = param<int>(p, "max_n", 7);
  std::size_t checked = 0, bad = 0;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& t : oracles::labeled_canonical_cotrees(n, Decoration::One)) {
      ++checked;
      bad += static_cast<int>(vertex_connectivity(t)) != oracles::min_vertex_cut(cograph_of(t));
    }
  r.measurements.push_back(measure("connected cographs checked", static_cast<double>(checked), ">", 0));
  r.measurements.push_back(mismatches("kappa vs minimum vertex cut", bad));
  return r;
}

CheckReport render_image(const json& p) {
  CheckReport r;
  const auto n = param<std::size_t>(p, "n", 4482);
  const auto eps = param<double>(p, "epsilon", 0.1);
  Rng rng(seed_of(p));
  const Cotree t = sample_boltzmann_labeled(rho_labeled(), n, eps, rng);
  const double size = static_cast<double>(t.size());
  r.measurements.push_back(measure("size", size, ">=", std::ceil(static_cast<double>(n) * (1 - eps))));
  r.measurements.push_back(measure("size", size, "<=", std::floor(static_cast<double>(n) * (1 + eps))));
  const GrayImage image = adjacency_image(t);
  const std::string bytes = to_pgm(image);
  const GrayImage back = parse_pgm(bytes);
  r.measurements.push_back(measure("image side", static_cast<double>(back.width), "==", size));
  std::size_t asymmetric = 0, bad_diagonal = 0, bad_pixel = 0;
  const Graph g = cograph_in_dfs_order(t);
  for (std::size_t i = 0; i < back.height; ++i) {
    bad_diagonal += back.at(i, i) != 255;
    for (std::size_t j = 0; j < back.width; ++j) {
      asymmetric += back.at(i, j) != back.at(j, i);
      bad_pixel += (back.at(i, j) == 0) != g.adjacent(i, j) || (back.at(i, j) != 0 && back.at(i, j) != 255);
    }
  }
  r.measurements.push_back(mismatches("asymmetric pixels", asymmetric));
  r.measurements.push_back(mismatches("dark diagonal pixels", bad_diagonal));
  r.measurements.push_back(mismatches("pixels disagreeing with adjacency", bad_pixel));
  r.measurements.push_back(mismatches("round trip differences", back == image ? 0 : 1));
  if (p.contains("out")) {
    std::ofstream out(p.at("out").get<std::string>(), std::ios::binary);
    out << bytes;
  }
  return r;
}

const std::map<std::string, std::function<CheckReport(const json&)>>& suites() {
  static const std::map<std::string, std::function<CheckReport(const json&)>> table = {
      {"exact-counts", exact_counts},
      {"series-identities", series_identities},
      {"marked-series", marked_series},
      {"radius", radius},
      {"uniformity-small-n", uniformity_small_n},
      {"degree-law", degree_law},
      {"degree-wasserstein", degree_wasserstein},
      {"induced-subtrees", induced_subtrees},
      {"connectivity-law", connectivity_law},
      {"connectivity-probability", connectivity_probability},
      {"vertex-connectivity-oracle", vertex_connectivity_oracle},
      {"render-image", render_image},
  };
  return table;
}

}  // namespace

bool CheckReport::pass() const {
  return std::all_of(measurements.begin(), measurements.end(), [](const Measurement& m) { return m.pass; });
}

std::string CheckReport::summary() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < measurements.size(); ++i) {
    const auto& m = measurements[i];
    if (i) out << "; ";
    out << m.metric << '=' << m.value << ' ' << m.relation << ' ' << m.threshold;
    if (!m.pass) out << " [FAIL]";
  }
  return out.str();
}

json CheckReport::to_json() const {
  json items = json::array();
  for (const auto& m : measurements)
    items.push_back({{"metric", m.metric},
                     {"value", m.value},
                     {"relation", m.relation},
                     {"threshold", m.threshold},
                     {"pass", m.pass}});
  return {{"suite", suite}, {"pass", pass()}, {"seconds", seconds}, {"measurements", items}};
}

std::vector<std::string> check_suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : suites()) out.push_back(name);
  return out;
}

CheckReport run_check(const std::string& suite, const json& params) {
  const auto it = suites().find(suite);
  if (it == suites().end()) throw InvalidArgument("unknown check suite: " + suite);
  const auto start = std::chrono::steady_clock::now();
  CheckReport report = it->second(params);
  report.suite = suite;
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (params.contains("max_seconds"))
    report.measurements.push_back(measure("seconds", report.seconds, "<=", params.at("max_seconds").get<double>()));
  return report;
}

}  // namespace cograph
