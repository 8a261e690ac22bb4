#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <iosfwd>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "cograph/cotree.hpp"
#include "cograph/enumeration.hpp"
#include "cograph/graph.hpp"
#include "cograph/rng.hpp"

namespace cograph {

/// Vertex connectivity of a connected cograph: n minus the largest subtree
/// under the root. Complete graphs (root 1 over leaves only) give n - 1, a
/// single vertex gives 0. Throws DisconnectedInput when the root is a 0-node.
std::size_t vertex_connectivity(const Cotree& t);

/// Real-valued samples, sorted on demand.
class RealDistribution {
 public:
  RealDistribution() = default;
  explicit RealDistribution(std::vector<double> samples);

  void add(double x) { samples_.push_back(x), sorted_ = false; }
  void merge(const RealDistribution& other);
  std::size_t size() const noexcept { return samples_.size(); }
  bool empty() const noexcept { return samples_.empty(); }
  std::span<const double> sorted() const;
  double mean() const;

  void write_csv(std::ostream& out) const;

 private:
  mutable std::vector<double> samples_;
  mutable bool sorted_ = true;
};

/// Counts per key; probabilities carry binomial standard errors.
class KeyedDistribution {
 public:
  void add(const std::string& key, std::uint64_t count = 1);
  void merge(const KeyedDistribution& other);

  std::uint64_t total() const noexcept { return total_; }
  std::uint64_t count(const std::string& key) const;
  double probability(const std::string& key) const;
  /// sqrt(p (1 - p) / total).
  double standard_error(const std::string& key) const;
  const std::map<std::string, std::uint64_t>& counts() const noexcept { return counts_; }

  /// key,count,probability,stderr
  void write_csv(std::ostream& out) const;

 private:
  std::map<std::string, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

/// Point mass 1/n at deg(v)/n for every vertex.
RealDistribution degree_distribution(const Cotree& t);

/// Integral over [0, 1] of |F(x) - x| where F is the empirical CDF. Throws
/// InvalidArgument on an empty distribution.
double wasserstein1_vs_uniform(const RealDistribution& d);

/// Half the L1 distance; keys missing on one side count as 0.
double total_variation(const KeyedDistribution& a, const KeyedDistribution& b);
/// Distance between an integer-keyed law (keys "1", "2", ...) and a limit
/// law, over buckets j = 1..J and one bucket for everything beyond J, where J
/// is the length of law.probabilities.
double total_variation(const KeyedDistribution& a, const LimitLaw& law);

struct ChiSquareResult {
  double statistic = 0;
  std::size_t degrees_of_freedom = 0;
  double p_value = 1;
};
/// Pearson statistic of observed counts against expected probabilities.
ChiSquareResult chi_square(std::span<const std::uint64_t> observed, std::span<const double> expected);
/// Against the uniform law on the listed keys; keys outside the list are
/// lumped into an extra cell with expectation 0, which forces p = 0 if hit.
ChiSquareResult chi_square_uniform(const KeyedDistribution& d, std::span<const std::string> keys);

/// (count - trials p) / sqrt(trials p (1 - p)).
double binomial_z(std::uint64_t count, std::uint64_t trials, double p);

/// Runs `trial(rng, result)` `trials` times. Trials are cut into fixed chunks
/// of `chunk` trials; chunk i uses Rng(seed).split(i) and chunk results are
/// merged in index order, so the outcome does not depend on `workers`
/// (0 = hardware concurrency).
template <class Result, class Trial>
Result run_trials(std::size_t trials, std::uint64_t seed, Trial&& trial, unsigned workers = 0,
                  std::size_t chunk = 1000) {
  const std::size_t chunks = (trials + chunk - 1) / chunk;
  std::vector<Result> partial(chunks);
  std::atomic<std::size_t> next{0};
  const Rng base(seed);
  std::mutex error_mutex;
  std::exception_ptr error;
  auto work = [&] {
    try {
      for (std::size_t i = next++; i < chunks; i = next++) {
        Rng rng = base.split(i);
        const std::size_t count = std::min(chunk, trials - i * chunk);
        for (std::size_t t = 0; t < count; ++t) trial(rng, partial[i]);
      }
    } catch (...) {
      next = chunks;
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(chunks, 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  if (error) std::rethrow_exception(error);
  Result out;
  for (const auto& r : partial) out.merge(r);
  return out;
}

using CotreeSampler = std::function<Cotree(Rng&)>;

/// Per trial: one sampled cotree, k distinct uniform leaves in order, and
/// the canonical encoding (with labels) of the induced cotree.
KeyedDistribution empirical_induced_distribution(const CotreeSampler& sampler, std::size_t k, std::size_t trials,
                                                 std::uint64_t seed, unsigned workers = 0);

/// Per trial: one sampled cotree and the normalized degree of one uniform
/// vertex.
RealDistribution empirical_vertex_degrees(const CotreeSampler& sampler, std::size_t trials, std::uint64_t seed,
                                          unsigned workers = 0);

/// Per trial: vertex connectivity of one sampled (connected) cotree.
KeyedDistribution empirical_connectivity(const CotreeSampler& sampler, std::size_t trials, std::uint64_t seed,
                                         unsigned workers = 0);

/// Exact law of the graph induced by k i.i.d. uniform vertices of G (repeated
/// vertices are non-adjacent), keyed by canonical_form_small. Scans n^(k-1)
/// prefixes with one masked popcount per adjacency pattern of the last
/// vertex. Throws LimitExceeded unless 1 <= k <= 4 and n^(k-1) <= 2^24.
std::map<std::string, double> subgraph_densities(std::size_t k, const Graph& G);
double subgraph_density(const Graph& g, const Graph& G);

struct DensityEstimate {
  double value = 0;
  double standard_error = 0;
};
DensityEstimate subgraph_density_monte_carlo(const Graph& g, const Graph& G, std::size_t trials, Rng& rng);

}  // namespace cograph
