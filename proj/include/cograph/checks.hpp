#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace cograph {

/// One measured quantity against its threshold.
struct Measurement {
  std::string metric;
  double value = 0;
  std::string relation;  ///< "<=", ">=", ">" or "=="
  double threshold = 0;
  bool pass = false;
};

struct CheckReport {
  std::string suite;
  std::vector<Measurement> measurements;
  double seconds = 0;

  bool pass() const;
  /// "metric=value<=threshold" items joined by "; ", failing ones marked.
  std::string summary() const;
  nlohmann::json to_json() const;
};

/// Named verification suites used by `cographs check` and the acceptance
/// runner: exact-counts, series-identities, marked-series, radius,
/// uniformity-small-n, degree-law, degree-wasserstein, induced-subtrees,
/// connectivity-law, connectivity-probability, vertex-connectivity-oracle,
/// render-image.
std::vector<std::string> check_suite_names();

/// Runs one suite. `params` overrides sizes, trial counts, tolerances and
/// the seed; see the acceptance data file for the recognised keys. Throws
/// InvalidArgument on an unknown suite.
CheckReport run_check(const std::string& suite, const nlohmann::json& params = nlohmann::json::object());

}  // namespace cograph
