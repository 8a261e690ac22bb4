#include "cograph/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "cograph/checks.hpp"
#include "cograph/enumeration.hpp"
#include "cograph/errors.hpp"
#include "cograph/experiment.hpp"
#include "cograph/render.hpp"
#include "cograph/samplers.hpp"
#include "cograph/statistics.hpp"

namespace cograph {

using nlohmann::json;

namespace {

constexpr std::size_t kSeriesCap = 2000;

struct Options {
  std::size_t n = 1;
  std::uint64_t seed = 0;
  std::string kind;
  double epsilon = 0.1;
  double p = 0.5;
  std::size_t k = 3;
  std::size_t trials = 1000;
  std::size_t check_trials = 0;
  std::string format;
  std::string out;
  std::string input;
  std::string spec;
  std::string metric = "degree";
  bool connected = false;
  unsigned workers = 0;
  std::vector<std::string> suites;
};

// Writes to --out when given, else to the command's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw InvalidArgument("cannot open " + path + " for writing");
    }
    stream_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return std::move(s).str();
}

SampleConfig sample_config(const Options& o) {
  SampleConfig c;
  if (!o.spec.empty()) {
    ExperimentSpec spec = json::parse(read_file(o.spec)).get<ExperimentSpec>();
    return spec.sample;
  }
  c.n = o.n;
  c.seed = o.seed;
  c.kind = parse_sampler_kind(o.kind.empty() ? "labeled-exact" : o.kind);
  c.epsilon = o.epsilon;
  c.p = o.p;
  c.connected = o.connected;
  return c;
}

CotreeSampler sampler_for(const SampleConfig& c) {
  const std::size_t n = c.n;
  switch (c.kind) {
    case SamplerKind::LabeledExact:
      return [n, conn = c.connected](Rng& rng) { return sample_labeled_cotree_uniform(n, rng, conn); };
    case SamplerKind::UnlabeledExact:
      return [n, conn = c.connected](Rng& rng) { return sample_unlabeled_cotree_uniform(n, rng, conn); };
    case SamplerKind::LabeledBoltzmann:
      return [n, c, b = BoltzmannSampler(rho_labeled())](Rng& rng) {
        return b.sample(n, c.epsilon, rng, c.max_attempts);
      };
    case SamplerKind::BinaryDecorated:
      return [n, p = c.p](Rng& rng) { return sample_binary_decorated(n, p, rng).to_cotree(); };
  }
  throw InvalidArgument("unknown sampler kind");
}

int cmd_count(const Options& o, std::ostream& out) {
  const bool labeled = o.kind.empty() || o.kind == "labeled";
  if (!labeled && o.kind != "unlabeled") throw InvalidArgument("count: --kind must be labeled or unlabeled");
  if (o.n > kSeriesCap) throw LimitExceeded("count: --n is capped at " + std::to_string(kSeriesCap));
  Sink sink(o.out, out);
  std::ostream& s = sink.get();
  const auto trees = labeled ? labeled_tree_counts(o.n) : unlabeled_tree_counts(o.n);
  const auto graphs = labeled ? labeled_cograph_counts(o.n) : unlabeled_cograph_counts(o.n);
  if (o.format == "json") {
    json rows = json::array();
    for (std::size_t i = 1; i <= o.n; ++i)
      rows.push_back({{"n", i}, {labeled ? "l" : "u", trees[i].get_str()}, {labeled ? "m" : "v", graphs[i].get_str()}});
    s << rows.dump(2) << '\n';
    return 0;
  }
  s << (labeled ? "n,l_n,m_n\n" : "n,u_n,v_n\n");
  for (std::size_t i = 1; i <= o.n; ++i) s << i << ',' << trees[i] << ',' << graphs[i] << '\n';
  return 0;
}

TruncatedSeries named_series(const std::string& name, std::size_t N) {
  if (name == "L") return series_L(N);
  if (name == "M") return series_M(N);
  if (name == "U") return series_U(N);
  if (name == "V") return series_V(N);
  if (name == "D") return series_D(N);
  if (name == "Lprime" || name == "Leven" || name == "Lodd") {
    const auto m = series_marked_labeled(N);
    return name == "Lprime" ? m.Lprime : name == "Leven" ? m.Leven : m.Lodd;
  }
  if (name == "Uprime" || name == "Ustar" || name == "Ueven" || name == "Uodd") {
    const auto m = series_marked_unlabeled(N);
    return name == "Uprime" ? m.Uprime : name == "Ustar" ? m.Ustar : name == "Ueven" ? m.Ueven : m.Uodd;
  }
  throw InvalidArgument("series: unknown series " + name);
}

int cmd_series(const Options& o, std::ostream& out) {
  if (o.n > kSeriesCap) throw LimitExceeded("series: --n is capped at " + std::to_string(kSeriesCap));
  const std::string name = o.kind.empty() ? "L" : o.kind;
  const TruncatedSeries s = named_series(name, o.n);
  Sink sink(o.out, out);
  if (o.format == "json") {
    json coeffs = json::array();
    for (const auto& c : s.coefficients()) coeffs.push_back(c.get_str());
    sink.get() << json{{"series", name}, {"order", o.n}, {"coefficients", coeffs}}.dump(2) << '\n';
    return 0;
  }
  sink.get() << "n,coefficient\n";
  for (std::size_t i = 0; i <= s.order(); ++i) sink.get() << i << ',' << s[i] << '\n';
  return 0;
}

void write_cotree(std::ostream& s, const Cotree& t, const std::string& format, const SampleConfig& c) {
  if (format.empty() || format == "cotree") {
    s << to_string(t) << '\n';
  } else if (format == "edges") {
    write_edge_list(s, cograph_of(t));
  } else if (format == "json") {
    s << json{{"config", c}, {"size", t.size()}, {"cotree", to_string(t)}}.dump(2) << '\n';
  } else {
    throw InvalidArgument("sample: --format must be cotree, edges or json");
  }
}

int cmd_sample(const Options& o, std::ostream& out) {
  const SampleConfig c = sample_config(o);
  const Cotree t = sample(c);
  Sink sink(o.out, out);
  write_cotree(sink.get(), t, o.format, c);
  return 0;
}

int cmd_stats(const Options& o, std::ostream& out) {
  Sink sink(o.out, out);
  std::ostream& s = sink.get();
  if (!o.input.empty()) {
    const Cotree t = parse_cotree(read_file(o.input));
    const auto degrees = degree_distribution(t);
    if (o.format == "csv") {
      degrees.write_csv(s);
      return 0;
    }
    json summary{{"size", t.size()},
                 {"edges", cograph_of(t).edge_count()},
                 {"mean_normalized_degree", degrees.mean()},
                 {"w1_to_uniform", wasserstein1_vs_uniform(degrees)}};
    if (t.size() == 1 || t.decoration(t.root()) == Decoration::One) summary["vertex_connectivity"] = vertex_connectivity(t);
    s << summary.dump(2) << '\n';
    return 0;
  }

  SampleConfig c = sample_config(o);
  std::string metric = o.metric;
  std::size_t trials = o.trials;
  std::size_t k = o.k;
  std::optional<double> tolerance;
  if (!o.spec.empty()) {
    const auto spec = json::parse(read_file(o.spec)).get<ExperimentSpec>();
    if (!spec.metrics.empty()) metric = spec.metrics.front();
    trials = spec.trials;
    k = spec.k;
    if (const auto it = spec.tolerances.find(metric); it != spec.tolerances.end()) tolerance = it->second;
  }
  json summary{{"config", c}, {"metric", metric}, {"trials", trials}};
  double value = 0;
  if (metric == "degree") {
    const auto d = empirical_vertex_degrees(sampler_for(c), trials, c.seed, o.workers);
    if (o.format == "csv") return d.write_csv(s), 0;
    value = wasserstein1_vs_uniform(d);
  } else if (metric == "kappa") {
    c.connected = true;
    const auto d = empirical_connectivity(sampler_for(c), trials, c.seed, o.workers);
    if (o.format == "csv") return d.write_csv(s), 0;
    value = total_variation(d, c.kind == SamplerKind::UnlabeledExact ? pi_u_distribution(60) : pi_distribution(60));
  } else if (metric == "induced") {
    const auto d = empirical_induced_distribution(sampler_for(c), k, trials, c.seed, o.workers);
    if (o.format == "csv") return d.write_csv(s), 0;
    // Binary induced cotrees tend to (k-1)!/(2k-2)! each, the rest to 0.
    double binary_count = 1;
    for (std::size_t i = k; i <= 2 * k - 2; ++i) binary_count *= static_cast<double>(i);
    const double limit = 1 / binary_count;
    json buckets = json::object();
    std::size_t binary_seen = 0;
    for (const auto& [key, count] : d.counts()) {
      const bool binary = parse_cotree(key).internal_count() + 1 == k;
      binary_seen += binary;
      value = std::max(value, std::fabs(d.probability(key) - (binary ? limit : 0)));
      buckets[key] = {{"probability", d.probability(key)}, {"stderr", d.standard_error(key)}};
    }
    if (static_cast<double>(binary_seen) < binary_count) value = std::max(value, limit);
    summary["k"] = k;
    summary["buckets"] = buckets;
  } else {
    throw InvalidArgument("stats: metric must be degree, kappa or induced");
  }
  summary["value"] = value;
  summary["tolerance"] = tolerance ? json(*tolerance) : json(nullptr);
  summary["pass"] = tolerance ? json(value <= *tolerance) : json(nullptr);
  s << summary.dump(2) << '\n';
  return 0;
}

int cmd_render(const Options& o, std::ostream& out) {
  const Cotree t = o.input.empty() ? sample(sample_config(o)) : parse_cotree(read_file(o.input));
  const GrayImage image = adjacency_image(t);
  Sink sink(o.out, out);
  write_pgm(sink.get(), image);
  return 0;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<std::string> suites = o.suites;
  if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) suites = check_suite_names();
  const auto known = check_suite_names();
  for (const auto& s : suites)
    if (std::find(known.begin(), known.end(), s) == known.end()) {
      err << "unknown suite: " << s << "\n";
      return 2;
    }
  json params = json::object();
  if (!o.spec.empty()) params = json::parse(read_file(o.spec));
  json reports = json::array();
  bool pass = true;
  for (const auto& s : suites) {
    json p = params.contains(s) ? params.at(s) : json::object();
    if (!p.contains("seed")) p["seed"] = o.seed;
    if (o.check_trials != 0 && !p.contains("trials")) p["trials"] = o.check_trials;
    const CheckReport r = run_check(s, p);
    pass = pass && r.pass();
    reports.push_back(r.to_json());
  }
  Sink sink(o.out, out);
  sink.get() << json{{"pass", pass}, {"reports", reports}}.dump(2) << '\n';
  return pass ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random cographs: counting, sampling and limit-law checks", "cographs"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--n", o.n, "size (or maximal size / series order)");
    c->add_option("--seed", o.seed, "64-bit seed");
    c->add_option("--kind", o.kind, "class, series name or sampler kind");
    c->add_option("--format", o.format, "cotree, edges, json or csv");
    c->add_option("--out", o.out, "output file (default stdout)");
  };
  auto sampling = [&](CLI::App* c) {
    c->add_option("--epsilon", o.epsilon, "relative Boltzmann size window");
    c->add_option("--p", o.p, "probability of decoration 0 for binary-decorated");
    c->add_flag("--connected", o.connected, "condition exact samplers on connectivity");
    c->add_option("--spec", o.spec, "ExperimentSpec JSON file");
  };

  auto* count = app.add_subcommand("count", "tree and cograph counts up to --n");
  common(count);
  auto* series = app.add_subcommand("series", "coefficients of a generating series (--kind L, M, U, V, D, ...)");
  common(series);
  auto* sample_cmd = app.add_subcommand("sample", "one random cotree");
  common(sample_cmd);
  sampling(sample_cmd);
  auto* stats = app.add_subcommand("stats", "statistics of a cotree file or of repeated samples");
  common(stats);
  sampling(stats);
  stats->add_option("--k", o.k, "marked leaves for --metric induced");
  stats->add_option("--trials", o.trials, "number of samples");
  stats->add_option("--metric", o.metric, "degree, kappa or induced");
  stats->add_option("--input", o.input, "cotree file instead of sampling");
  stats->add_option("--workers", o.workers, "threads (0 = all cores)");
  auto* render = app.add_subcommand("render", "adjacency matrix as a P5 graymap");
  common(render);
  sampling(render);
  render->add_option("--input", o.input, "cotree file instead of sampling");
  auto* check = app.add_subcommand("check", "verification suites (names or 'all')");
  check->add_option("suites", o.suites, "suite names");
  check->add_option("--seed", o.seed, "seed for suites without one");
  check->add_option("--trials", o.check_trials, "trial count for suites without one");
  check->add_option("--spec", o.spec, "JSON object of per-suite parameters");
  check->add_option("--out", o.out, "report file (default stdout)");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  try {
    if (*count) return cmd_count(o, out);
    if (*series) return cmd_series(o, out);
    if (*sample_cmd) return cmd_sample(o, out);
    if (*stats) return cmd_stats(o, out);
    if (*render) return cmd_render(o, out);
    if (*check) return cmd_check(o, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace cograph
