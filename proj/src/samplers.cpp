#include "cograph/samplers.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <mutex>
#include <numeric>
#include <span>

#include "cograph/enumeration.hpp"
#include "cograph/errors.hpp"

namespace cograph {

namespace {

constexpr mp_bitcnt_t kExactBits = 320;
constexpr long double kUnlabeledScale = 0.2808L;

struct Outcome {
  std::size_t d = 0;  // component size
  std::size_t j = 1;  // copies
};

void assign(long double& x, long double v) { x = v; }
void assign(mpf_class& x, long double v) {
  const auto hi = static_cast<double>(v);
  x = hi;
  x += static_cast<double>(v - hi);
}

// Scaled counts. Labeled: a_n = l_n c^n / n!, b_n = e_n c^n / n!.
// Unlabeled: a_n = u_n c^n, b_n = (multisets of size n) c^n and
// gamma_n = sum over d | n of d a_d c^(n - d).
template <class T>
struct Tables {
  bool labeled = true;
  T zero;
  T c;
  std::vector<T> a, b, gamma, cpow;

  Tables(bool is_labeled, long double scale, const T& proto) : labeled(is_labeled), zero(proto), c(proto) {
    assign(c, scale);
    T one = zero;
    assign(one, 1.0L);
    a = {zero, c};
    b = {one, c};
    gamma = {zero, c};
    cpow = {one, c};
  }

  std::size_t size() const { return a.size(); }

  void extend(std::size_t n, const std::vector<std::vector<std::uint32_t>>& divisors) {
    T sum = zero;
    T term = zero;
    for (std::size_t m = a.size(); m <= n; ++m) {
      cpow.push_back(cpow.back());
      cpow.back() *= c;
      sum = zero;
      if (labeled) {
        for (std::size_t k = 1; k < m; ++k) {
          term = a[k];
          term *= b[m - k];
          term *= static_cast<unsigned long>(k);
          sum += term;
        }
      } else {
        T proper = zero;
        for (const auto d : divisors[m]) {
          term = a[d];
          term *= cpow[m - d];
          term *= static_cast<unsigned long>(d);
          proper += term;
        }
        sum = proper;
        for (std::size_t k = 1; k < m; ++k) {
          term = gamma[k];
          term *= b[m - k];
          sum += term;
        }
        gamma.push_back(proper);
      }
      sum /= static_cast<unsigned long>(m);
      a.push_back(sum);
      b.push_back(sum);
      b.back() *= 2UL;
      if (!labeled) {
        term = sum;
        term *= static_cast<unsigned long>(m);
        gamma.back() += term;
      }
    }
  }

  // Weight of choosing the outcome inside a (multi)set of total size m.
  void weight(std::size_t m, Outcome o, T& out) const {
    out = a[o.d];
    out *= b[m - o.j * o.d];
    out *= static_cast<unsigned long>(o.d);
    if (o.j > 1) out *= cpow[(o.j - 1) * o.d];
  }

  // Sum of all weights: m a_m without the single-component outcome, else m b_m.
  void total(std::size_t m, bool at_least_two, T& out) const {
    out = at_least_two ? a[m] : b[m];
    out *= static_cast<unsigned long>(m);
  }
};

// Outcomes for a set of size m in rounds r = 1, 2, ...: one large component
// of size m - r + 1, one small component of size r, then for unlabeled sets
// the replicated components d^j with d j = r. Mass sits near the start.
template <class Visit>
void scan(std::size_t m, bool at_least_two, bool labeled, const std::vector<std::vector<std::uint32_t>>& divisors,
          Visit&& visit) {
  for (std::size_t r = 1; r <= m; ++r) {
    const std::size_t high = m - r + 1;
    if (r <= high && !(at_least_two && r == 1)) {
      if (visit(Outcome{high, 1})) return;
    }
    if (r < high) {
      if (visit(Outcome{r, 1})) return;
    }
    if (labeled) {
      if (r >= high) return;
      continue;
    }
    for (const auto d : divisors[r])
      if (visit(Outcome{d, r / d})) return;
  }
}

std::vector<std::vector<std::uint32_t>> proper_divisors(std::size_t n) {
  std::vector<std::vector<std::uint32_t>> out(n + 1);
  for (std::size_t d = 1; d <= n / 2; ++d)
    for (std::size_t m = 2 * d; m <= n; m += d) out[m].push_back(static_cast<std::uint32_t>(d));
  return out;
}

Cotree build_from_arity(std::span<const std::uint32_t> arity, Decoration root, bool labeled, Rng& rng) {
  std::size_t leaves = 0;
  for (const auto k : arity) leaves += k == 0;
  std::vector<int> labels;
  if (labeled) {
    labels.resize(leaves);
    std::iota(labels.begin(), labels.end(), 1);
    std::shuffle(labels.begin(), labels.end(), rng);
  }
  Cotree::Builder builder(arity.size());
  struct Open {
    NodeId node;
    Decoration decoration;
    std::uint32_t missing;
  };
  std::vector<Open> stack;
  std::size_t next_leaf = 0;
  for (const auto k : arity) {
    NodeId parent = kNoNode;
    Decoration d = root;
    if (!stack.empty()) {
      parent = stack.back().node;
      d = stack.back().decoration == Decoration::One ? Decoration::Zero : Decoration::One;
      if (--stack.back().missing == 0) stack.pop_back();
    }
    if (k == 0) {
      builder.add_child(parent, Decoration::Leaf, labeled ? labels[next_leaf++] : 0);
    } else {
      stack.push_back(Open{builder.add_child(parent, d), d, k});
    }
  }
  return std::move(builder).build();
}

}  // namespace

struct ExactSampler::Impl {
  bool labeled;
  std::size_t max_n;
  long double margin;
  std::vector<std::vector<std::uint32_t>> divisors;
  Tables<long double> fast;
  std::mutex exact_mutex;
  std::unique_ptr<Tables<mpf_class>> exact;
  std::atomic<std::uint64_t> fallbacks{0};

  Impl(bool is_labeled, std::size_t n, long double relative_margin)
      : labeled(is_labeled),
        max_n(n),
        divisors(is_labeled ? std::vector<std::vector<std::uint32_t>>() : proper_divisors(n)),
        fast(is_labeled, is_labeled ? rho_labeled() : kUnlabeledScale, 0.0L) {
    fast.extend(n, divisors);
    const long double table_error = 64.0L * static_cast<long double>(n) * static_cast<long double>(n) *
                                    std::numeric_limits<long double>::epsilon();
    margin = relative_margin >= 0 ? relative_margin : std::max(1e-15L, table_error);
  }

  Outcome choose(std::size_t m, bool at_least_two, Rng& rng) {
    const std::uint64_t word = rng();
    long double total = 0;
    fast.total(m, at_least_two, total);
    const long double target = std::ldexp(static_cast<long double>(word), -64) * total;
    const long double slack = margin * total;
    long double cum = 0;
    long double w = 0;
    Outcome chosen;
    bool found = false;
    bool close = false;
    scan(m, at_least_two, labeled, divisors, [&](Outcome o) {
      fast.weight(m, o, w);
      const long double next = cum + w;
      if (target < next) {
        chosen = o;
        found = true;
        close = target - cum < slack || next - target < slack;
        return true;
      }
      cum = next;
      return false;
    });
    if (found && !close) return chosen;
    return choose_exact(m, at_least_two, word, rng);
  }

  // Redraws the same choice with the variate word extended by three more
  // random words, against 320-bit tables.
  Outcome choose_exact(std::size_t m, bool at_least_two, std::uint64_t word, Rng& rng) {
    fallbacks.fetch_add(1, std::memory_order_relaxed);
    mpf_class x(static_cast<unsigned long>(word), kExactBits);
    for (int i = 0; i < 3; ++i) {
      mpf_mul_2exp(x.get_mpf_t(), x.get_mpf_t(), 64);
      x += static_cast<unsigned long>(rng());
    }
    mpf_div_2exp(x.get_mpf_t(), x.get_mpf_t(), 256);

    std::lock_guard lock(exact_mutex);
    const mpf_class proto(0, kExactBits);
    if (!exact) exact = std::make_unique<Tables<mpf_class>>(labeled, fast.c, proto);
    if (exact->size() <= m) exact->extend(m, divisors);

    mpf_class total = proto;
    exact->total(m, at_least_two, total);
    mpf_class target = x;
    target *= total;
    mpf_class cum = proto;
    mpf_class w = proto;
    Outcome chosen;
    scan(m, at_least_two, labeled, divisors, [&](Outcome o) {
      chosen = o;
      exact->weight(m, o, w);
      cum += w;
      return target < cum;
    });
    return chosen;
  }

  // Preorder child counts of the sampled tree; replicated unlabeled
  // components are copied once their first copy is complete.
  std::vector<std::uint32_t> shape(std::size_t n, Rng& rng) {
    struct Frame {
      std::size_t slot;
      std::size_t remaining;
      std::uint32_t children;
      std::size_t copies;
      std::size_t child_start;
    };
    std::vector<std::uint32_t> arity;
    arity.reserve(2 * n);
    std::vector<Frame> frames;
    auto open = [&](std::size_t size) {
      if (size > 1) frames.push_back(Frame{arity.size(), size, 0, 0, 0});
      arity.push_back(0);
    };
    open(n);
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.copies > 0) {
        const std::size_t end = arity.size();
        for (std::size_t c = 0; c < f.copies; ++c)
          for (std::size_t i = f.child_start; i < end; ++i) arity.push_back(arity[i]);
        f.copies = 0;
      }
      if (f.remaining == 0) {
        arity[f.slot] = f.children;
        frames.pop_back();
        continue;
      }
      const Outcome o = choose(f.remaining, f.children == 0, rng);
      f.remaining -= o.d * o.j;
      f.children += static_cast<std::uint32_t>(o.j);
      f.copies = o.j - 1;
      f.child_start = arity.size();
      open(o.d);
    }
    return arity;
  }
};

ExactSampler::ExactSampler(bool labeled, std::size_t max_n, long double relative_margin)
    : impl_(std::make_unique<Impl>(labeled, std::max<std::size_t>(max_n, 2), relative_margin)) {}

ExactSampler::~ExactSampler() = default;

bool ExactSampler::labeled() const noexcept { return impl_->labeled; }
std::size_t ExactSampler::max_n() const noexcept { return impl_->max_n; }
std::uint64_t ExactSampler::fallback_count() const noexcept { return impl_->fallbacks.load(); }

Cotree ExactSampler::sample(std::size_t n, Rng& rng, bool connected) const {
  if (n == 0) throw InvalidArgument("sample size must be positive");
  if (n > impl_->max_n) throw InvalidArgument("sample size exceeds the sampler tables");
  Decoration root = Decoration::One;
  if (n >= 2 && !connected) root = rng.below(2) == 0 ? Decoration::Zero : Decoration::One;
  const auto arity = impl_->shape(n, rng);
  return build_from_arity(arity, root, impl_->labeled, rng);
}

namespace {

const ExactSampler& shared_sampler(bool labeled, std::size_t n) {
  static std::mutex mutex;
  static std::vector<std::unique_ptr<ExactSampler>> samplers[2];
  std::lock_guard lock(mutex);
  auto& list = samplers[labeled ? 1 : 0];
  if (list.empty() || list.back()->max_n() < n)
    list.push_back(std::make_unique<ExactSampler>(labeled, std::bit_ceil(std::max<std::size_t>(n, 64))));
  return *list.back();
}

}  // namespace

const ExactSampler& labeled_exact_sampler(std::size_t n) { return shared_sampler(true, n); }
const ExactSampler& unlabeled_exact_sampler(std::size_t n) { return shared_sampler(false, n); }

Cotree sample_labeled_cotree_uniform(std::size_t n, Rng& rng, bool connected) {
  return labeled_exact_sampler(n).sample(n, rng, connected);
}

Cotree sample_unlabeled_cotree_uniform(std::size_t n, Rng& rng, bool connected) {
  return unlabeled_exact_sampler(n).sample(n, rng, connected);
}

long double boltzmann_L(long double x) {
  const long double rho = rho_labeled();
  if (!(x > 0 && x <= rho)) throw InvalidArgument("Boltzmann parameter must lie in (0, rho]");
  // u = log 2 - L solves e^-u - 1 + u = (rho - x) / 2; the double root at
  // x = rho becomes a simple one in u.
  const long double delta = (rho - x) / 2;
  long double u = std::sqrt(2 * delta);
  for (int i = 0; i < 100; ++i) {
    const long double slope = -std::expm1(-u);
    if (slope <= 0) break;
    const long double step = (std::expm1(-u) + u - delta) / slope;
    u -= step;
    if (std::fabs(step) <= 4 * std::numeric_limits<long double>::epsilon() * u) break;
  }
  return std::log(2.0L) - u;
}

namespace {
thread_local std::size_t tls_attempts = 0;
}

BoltzmannSampler::BoltzmannSampler(long double x) : x_(x), L_(boltzmann_L(x)), leaf_probability_(x / L_) {}

std::size_t BoltzmannSampler::last_attempts() { return tls_attempts; }

Cotree BoltzmannSampler::sample(std::size_t n, double epsilon, Rng& rng, std::size_t max_attempts) const {
  if (n == 0) throw InvalidArgument("sample size must be positive");
  if (!(epsilon >= 0 && epsilon < 1)) throw InvalidArgument("Boltzmann window must satisfy 0 <= epsilon < 1");
  const auto lo = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(n * (1 - epsilon))));
  const auto hi = static_cast<std::size_t>(std::floor(n * (1 + epsilon)));
  if (lo > hi) throw InvalidArgument("Boltzmann window contains no size");
  const double p_leaf = static_cast<double>(leaf_probability_);
  const double exp_minus_L = std::exp(-static_cast<double>(L_));
  const double mean = static_cast<double>(L_);

  auto poisson = [&] {
    const double u = rng.uniform01();
    std::uint32_t k = 0;
    double p = exp_minus_L;
    double cdf = p;
    while (u >= cdf && p > 0) {
      ++k;
      p *= mean / k;
      cdf += p;
    }
    return k;
  };

  std::vector<std::uint32_t> arity;
  for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
    arity.clear();
    std::size_t leaves = 0;
    std::size_t open = 1;
    while (open > 0 && leaves <= hi) {
      --open;
      if (rng.bernoulli(p_leaf)) {
        arity.push_back(0);
        ++leaves;
        continue;
      }
      std::uint32_t k = poisson();
      while (k < 2) k = poisson();
      arity.push_back(k);
      open += k;
    }
    if (open > 0 || leaves < lo || leaves > hi) continue;
    tls_attempts = attempt;
    const Decoration root = leaves == 1 ? Decoration::One : (rng.below(2) == 0 ? Decoration::Zero : Decoration::One);
    return build_from_arity(arity, root, true, rng);
  }
  throw IterationCapExceeded("Boltzmann sampler: no size in the window after " + std::to_string(max_attempts) +
                             " attempts");
}

Cotree sample_boltzmann_labeled(long double x, std::size_t n, double epsilon, Rng& rng, std::size_t max_attempts) {
  return BoltzmannSampler(x).sample(n, epsilon, rng, max_attempts);
}

std::string_view sampler_kind_name(SamplerKind kind) {
  switch (kind) {
    case SamplerKind::LabeledExact:
      return "labeled-exact";
    case SamplerKind::UnlabeledExact:
      return "unlabeled-exact";
    case SamplerKind::LabeledBoltzmann:
      return "labeled-boltzmann";
    case SamplerKind::BinaryDecorated:
      return "binary-decorated";
  }
  return "?";
}

SamplerKind parse_sampler_kind(std::string_view name) {
  for (const auto kind : {SamplerKind::LabeledExact, SamplerKind::UnlabeledExact, SamplerKind::LabeledBoltzmann,
                          SamplerKind::BinaryDecorated})
    if (sampler_kind_name(kind) == name) return kind;
  throw InvalidArgument("unknown sampler kind: " + std::string(name));
}

Cotree sample(const SampleConfig& config) {
  Rng rng(config.seed);
  switch (config.kind) {
    case SamplerKind::LabeledExact:
      return sample_labeled_cotree_uniform(config.n, rng, config.connected);
    case SamplerKind::UnlabeledExact:
      return sample_unlabeled_cotree_uniform(config.n, rng, config.connected);
    case SamplerKind::LabeledBoltzmann:
      return sample_boltzmann_labeled(rho_labeled(), config.n, config.epsilon, rng, config.max_attempts);
    case SamplerKind::BinaryDecorated:
      return sample_binary_decorated(config.n, config.p, rng).to_cotree();
  }
  throw InvalidArgument("unknown sampler kind");
}

}  // namespace cograph
