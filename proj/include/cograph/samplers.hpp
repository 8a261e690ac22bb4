#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string_view>

#include "cograph/binary_tree.hpp"
#include "cograph/cotree.hpp"
#include "cograph/rng.hpp"

namespace cograph {

enum class SamplerKind { LabeledExact, UnlabeledExact, LabeledBoltzmann, BinaryDecorated };

std::string_view sampler_kind_name(SamplerKind kind);
/// Accepts "labeled-exact", "unlabeled-exact", "labeled-boltzmann",
/// "binary-decorated".
SamplerKind parse_sampler_kind(std::string_view name);

struct SampleConfig {
  std::size_t n = 1;
  std::uint64_t seed = 0;
  SamplerKind kind = SamplerKind::LabeledExact;
  /// Relative Boltzmann window: sizes in [n(1 - epsilon), n(1 + epsilon)].
  double epsilon = 0.1;
  /// Probability of decoration 0 for binary-decorated trees.
  double p = 0.5;
  /// Condition exact samplers on a connected cograph (root decoration 1).
  bool connected = false;
  std::size_t max_attempts = 1'000'000;
};

/// Uniform canonical cotrees of a fixed size by the recursive method.
///
/// Every discrete choice is an inverse transform over the exact weights of
/// the decomposition. Choices are first resolved against long double tables
/// rescaled by a power of the radius; when the uniform variate falls within
/// the table error bound of a cell boundary, the variate is extended with
/// more random bits and the choice is redone on 320-bit tables built lazily
/// on first use. Tables are shared and thread safe.
class ExactSampler {
 public:
  /// `relative_margin` is the half-width, relative to the total weight, of the
  /// band around each cell boundary that triggers the exact redraw; negative
  /// selects max(1e-15, 64 n^2 eps). A margin of 1 sends every choice down
  /// the exact path.
  ExactSampler(bool labeled, std::size_t max_n, long double relative_margin = -1);
  ~ExactSampler();
  ExactSampler(const ExactSampler&) = delete;
  ExactSampler& operator=(const ExactSampler&) = delete;

  bool labeled() const noexcept;
  std::size_t max_n() const noexcept;

  /// Root decoration is uniform for n >= 2 unless `connected`, which forces 1.
  Cotree sample(std::size_t n, Rng& rng, bool connected = false) const;

  /// Number of choices that needed the high-precision tables so far.
  std::uint64_t fallback_count() const noexcept;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Process-wide samplers, grown to the next power of two on demand.
const ExactSampler& labeled_exact_sampler(std::size_t n);
const ExactSampler& unlabeled_exact_sampler(std::size_t n);

Cotree sample_labeled_cotree_uniform(std::size_t n, Rng& rng, bool connected = false);
Cotree sample_unlabeled_cotree_uniform(std::size_t n, Rng& rng, bool connected = false);

/// L(x): the solution in [0, log 2] of 2L - e^L + 1 = x, for 0 < x <= rho.
long double boltzmann_L(long double x);

/// Free Boltzmann sampler for L at parameter x (leaf with probability x/L(x),
/// otherwise a Poisson(L(x)) set of children redrawn until it has at least
/// two), rejected until the size lands in [n(1 - eps), n(1 + eps)]. Labels
/// are a uniform permutation and the root decoration is uniform.
class BoltzmannSampler {
 public:
  /// Throws InvalidArgument unless 0 < x <= rho.
  explicit BoltzmannSampler(long double x);
  long double x() const noexcept { return x_; }
  long double L() const noexcept { return L_; }

  Cotree sample(std::size_t n, double epsilon, Rng& rng, std::size_t max_attempts = 1'000'000) const;
  /// Attempts used by the last successful call on this thread.
  static std::size_t last_attempts();

 private:
  long double x_;
  long double L_;
  long double leaf_probability_;
};

Cotree sample_boltzmann_labeled(long double x, std::size_t n, double epsilon, Rng& rng,
                                std::size_t max_attempts = 1'000'000);

/// Dispatches on config.kind with a generator seeded from config.seed. The
/// binary-decorated kind returns the plane tree as a cotree (children in
/// plane order).
Cotree sample(const SampleConfig& config);

}  // namespace cograph
