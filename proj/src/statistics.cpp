#include "cograph/statistics.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>

#include "cograph/errors.hpp"

namespace cograph {

std::size_t vertex_connectivity(const Cotree& t) {
  const std::size_t n = t.size();
  if (n == 1) return 0;
  if (t.decoration(t.root()) != Decoration::One) throw DisconnectedInput("vertex connectivity of a disconnected cograph");
  std::size_t largest = 0;
  for (const NodeId c : t.children(t.root())) largest = std::max(largest, t.leaf_count(c));
  if (largest == 1) return n - 1;
  return n - largest;
}

RealDistribution::RealDistribution(std::vector<double> samples) : samples_(std::move(samples)), sorted_(false) {}

void RealDistribution::merge(const RealDistribution& other) {
  samples_.insert(samples_.end(), other.samples_.begin(), other.samples_.end());
  sorted_ = false;
}

std::span<const double> RealDistribution::sorted() const {
  if (!sorted_) {
    std::sort(samples_.begin(), samples_.end());
    sorted_ = true;
  }
  return samples_;
}

double RealDistribution::mean() const {
  if (samples_.empty()) throw InvalidArgument("mean of an empty distribution");
  long double sum = 0;
  for (const double x : samples_) sum += x;
  return static_cast<double>(sum / samples_.size());
}

void RealDistribution::write_csv(std::ostream& out) const {
  out << "value\n" << std::setprecision(17);
  for (const double x : sorted()) out << x << '\n';
}

void KeyedDistribution::add(const std::string& key, std::uint64_t count) {
  counts_[key] += count;
  total_ += count;
}

void KeyedDistribution::merge(const KeyedDistribution& other) {
  for (const auto& [key, count] : other.counts_) counts_[key] += count;
  total_ += other.total_;
}

std::uint64_t KeyedDistribution::count(const std::string& key) const {
  const auto it = counts_.find(key);
  return it == counts_.end() ? 0 : it->second;
}

double KeyedDistribution::probability(const std::string& key) const {
  return total_ == 0 ? 0.0 : static_cast<double>(count(key)) / static_cast<double>(total_);
}

double KeyedDistribution::standard_error(const std::string& key) const {
  if (total_ == 0) return 0;
  const double p = probability(key);
  return std::sqrt(p * (1 - p) / static_cast<double>(total_));
}

void KeyedDistribution::write_csv(std::ostream& out) const {
  out << "key,count,probability,stderr\n" << std::setprecision(17);
  for (const auto& [key, count] : counts_)
    out << '"' << key << "\"," << count << ',' << probability(key) << ',' << standard_error(key) << '\n';
}

RealDistribution degree_distribution(const Cotree& t) {
  const auto degrees = degree_vector(t);
  const auto n = static_cast<double>(t.size());
  std::vector<double> out;
  out.reserve(degrees.size());
  for (const auto d : degrees) out.push_back(static_cast<double>(d) / n);
  return RealDistribution(std::move(out));
}

double wasserstein1_vs_uniform(const RealDistribution& d) {
  if (d.empty()) throw InvalidArgument("Wasserstein distance of an empty distribution");
  const auto xs = d.sorted();
  const auto m = static_cast<double>(xs.size());
  // Integral of |y - x| over [a, b].
  auto piece = [](double y, double a, double b) {
    if (b <= a) return 0.0;
    if (y <= a) return ((b - y) * (b - y) - (a - y) * (a - y)) / 2;
    if (y >= b) return ((y - a) * (y - a) - (y - b) * (y - b)) / 2;
    return ((y - a) * (y - a) + (b - y) * (b - y)) / 2;
  };
  double total = 0;
  double left = 0;
  for (std::size_t i = 0; i <= xs.size(); ++i) {
    const double right = i < xs.size() ? std::clamp(xs[i], 0.0, 1.0) : 1.0;
    total += piece(static_cast<double>(i) / m, left, right);
    left = std::max(left, right);
  }
  return total;
}

double total_variation(const KeyedDistribution& a, const KeyedDistribution& b) {
  double sum = 0;
  for (const auto& [key, count] : a.counts()) sum += std::abs(a.probability(key) - b.probability(key));
  for (const auto& [key, count] : b.counts())
    if (a.count(key) == 0) sum += b.probability(key);
  return sum / 2;
}

double total_variation(const KeyedDistribution& a, const LimitLaw& law) {
  const std::size_t J = law.probabilities.size();
  std::vector<double> empirical(J + 1, 0.0);
  for (const auto& [key, count] : a.counts()) {
    std::size_t j = 0;
    try {
      j = std::stoul(key);
    } catch (const std::exception&) {
      throw InvalidArgument("total_variation: non-integer key " + key);
    }
    const std::size_t bucket = j >= 1 && j <= J ? j - 1 : J;
    empirical[bucket] += static_cast<double>(count) / static_cast<double>(a.total());
  }
  long double inside = 0;
  double sum = 0;
  for (std::size_t j = 0; j < J; ++j) {
    inside += law.probabilities[j];
    sum += std::abs(empirical[j] - static_cast<double>(law.probabilities[j]));
  }
  sum += std::abs(empirical[J] - static_cast<double>(1 - inside));
  return sum / 2;
}

ChiSquareResult chi_square(std::span<const std::uint64_t> observed, std::span<const double> expected) {
  if (observed.size() != expected.size() || observed.size() < 2)
    throw InvalidArgument("chi_square: need matching cells, at least two");
  std::uint64_t total = 0;
  for (const auto o : observed) total += o;
  ChiSquareResult r;
  std::size_t cells = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double e = expected[i] * static_cast<double>(total);
    if (e == 0) {
      if (observed[i] != 0) {
        r.statistic = std::numeric_limits<double>::infinity();
        r.p_value = 0;
      }
      continue;
    }
    ++cells;
    const double diff = static_cast<double>(observed[i]) - e;
    r.statistic += diff * diff / e;
  }
  r.degrees_of_freedom = cells - 1;
  if (r.p_value != 0 && r.degrees_of_freedom > 0) {
    const boost::math::chi_squared dist(static_cast<double>(r.degrees_of_freedom));
    r.p_value = boost::math::cdf(boost::math::complement(dist, r.statistic));
  }
  return r;
}

ChiSquareResult chi_square_uniform(const KeyedDistribution& d, std::span<const std::string> keys) {
  std::vector<std::uint64_t> observed;
  std::vector<double> expected;
  std::uint64_t listed = 0;
  for (const auto& key : keys) {
    observed.push_back(d.count(key));
    expected.push_back(1.0 / static_cast<double>(keys.size()));
    listed += observed.back();
  }
  observed.push_back(d.total() - listed);
  expected.push_back(0.0);
  return chi_square(observed, expected);
}

double binomial_z(std::uint64_t count, std::uint64_t trials, double p) {
  const double n = static_cast<double>(trials);
  return (static_cast<double>(count) - n * p) / std::sqrt(n * p * (1 - p));
}

namespace {

std::size_t uniform_leaf_index(const Cotree& t, Rng& rng) { return rng.below(t.size()); }

}  // namespace

KeyedDistribution empirical_induced_distribution(const CotreeSampler& sampler, std::size_t k, std::size_t trials,
                                                 std::uint64_t seed, unsigned workers) {
  if (k == 0) throw InvalidArgument("empirical_induced_distribution: k must be positive");
  return run_trials<KeyedDistribution>(
      trials, seed,
      [&](Rng& rng, KeyedDistribution& out) {
        const Cotree t = sampler(rng);
        if (t.size() < k) throw InvalidArgument("empirical_induced_distribution: k exceeds the sample size");
        std::vector<NodeId> marked;
        while (marked.size() < k) {
          const NodeId leaf = t.leaves()[uniform_leaf_index(t, rng)];
          if (std::find(marked.begin(), marked.end(), leaf) == marked.end()) marked.push_back(leaf);
        }
        out.add(canonical_encoding(induced_cotree(t, marked)));
      },
      workers);
}

RealDistribution empirical_vertex_degrees(const CotreeSampler& sampler, std::size_t trials, std::uint64_t seed,
                                          unsigned workers) {
  return run_trials<RealDistribution>(
      trials, seed,
      [&](Rng& rng, RealDistribution& out) {
        const Cotree t = sampler(rng);
        const auto degrees = degree_vector(t);
        out.add(static_cast<double>(degrees[uniform_leaf_index(t, rng)]) / static_cast<double>(t.size()));
      },
      workers);
}

KeyedDistribution empirical_connectivity(const CotreeSampler& sampler, std::size_t trials, std::uint64_t seed,
                                         unsigned workers) {
  return run_trials<KeyedDistribution>(
      trials, seed, [&](Rng& rng, KeyedDistribution& out) { out.add(std::to_string(vertex_connectivity(sampler(rng)))); },
      workers);
}

std::map<std::string, double> subgraph_densities(std::size_t k, const Graph& G) {
  const std::size_t n = G.size();
  if (k < 1 || k > bitrow::kMaxPatternRows + 1) throw LimitExceeded("subgraph_densities: k must lie in 1..4");
  if (n == 0) throw InvalidArgument("subgraph_densities: empty graph");
  long double prefixes = 1;
  for (std::size_t i = 1; i < k; ++i) prefixes *= static_cast<long double>(n);
  if (prefixes > static_cast<long double>(1 << 24)) throw LimitExceeded("subgraph_densities: n^(k-1) exceeds 2^24");

  // Pair (i, j), i < j, owns bit index_of[i][j] of an edge mask on k vertices.
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t j = 1; j < k; ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  const std::size_t masks = std::size_t{1} << pairs.size();
  std::vector<std::uint64_t> mask_count(masks, 0);

  const BitMatrix& adj = G.matrix();
  const std::size_t words = adj.words_per_row();
  const std::size_t prefix_len = k - 1;
  const std::size_t prefix_pairs = prefix_len * (prefix_len - 1) / 2;
  std::vector<std::size_t> prefix(prefix_len, 0);
  std::vector<const bitrow::Word*> rows(prefix_len);
  const auto total_prefixes = static_cast<std::size_t>(prefixes);
  for (std::size_t p = 0; p < total_prefixes; ++p) {
    std::size_t base = 0;
    std::size_t bit = 0;
    for (std::size_t j = 1; j < prefix_len; ++j)
      for (std::size_t i = 0; i < j; ++i, ++bit)
        if (G.adjacent(prefix[i], prefix[j])) base |= std::size_t{1} << bit;
    for (std::size_t i = 0; i < prefix_len; ++i) rows[i] = adj.row(prefix[i]);
    const unsigned patterns = 1U << prefix_len;
    for (unsigned flips = 0; flips < patterns; ++flips) {
      const std::size_t c =
          prefix_len == 0 ? n : bitrow::pattern_popcount(rows.data(), prefix_len, flips, adj.valid_mask(), words);
      if (c == 0) continue;
      std::size_t mask = base;
      for (std::size_t i = 0; i < prefix_len; ++i)
        if (!((flips >> i) & 1U)) mask |= std::size_t{1} << (prefix_pairs + i);
      mask_count[mask] += c;
    }
    for (std::size_t i = 0; i < prefix_len && ++prefix[i] == n; ++i) prefix[i] = 0;
  }

  const long double all = prefixes * static_cast<long double>(n);
  std::map<std::string, double> out;
  for (std::size_t mask = 0; mask < masks; ++mask) {
    if (mask_count[mask] == 0) continue;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if ((mask >> b) & 1U) edges.push_back(pairs[b]);
    out[canonical_form_small(Graph(k, edges))] += static_cast<double>(mask_count[mask] / all);
  }
  return out;
}

double subgraph_density(const Graph& g, const Graph& G) {
  const auto table = subgraph_densities(g.size(), G);
  const auto it = table.find(canonical_form_small(g));
  return it == table.end() ? 0.0 : it->second;
}

DensityEstimate subgraph_density_monte_carlo(const Graph& g, const Graph& G, std::size_t trials, Rng& rng) {
  if (trials == 0) throw InvalidArgument("subgraph_density_monte_carlo: no trials");
  const std::string target = canonical_form_small(g);
  const std::size_t k = g.size();
  std::vector<int> tuple(k);
  std::uint64_t hits = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    for (auto& v : tuple) v = static_cast<int>(rng.below(G.size()));
    hits += canonical_form_small(induced_subgraph(G, tuple)) == target;
  }
  const double p = static_cast<double>(hits) / static_cast<double>(trials);
  return {p, std::sqrt(p * (1 - p) / static_cast<double>(trials))};
}

}  // namespace cograph
