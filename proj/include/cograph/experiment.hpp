#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "cograph/samplers.hpp"

namespace cograph {

/// Everything a command needs; JSON round trips exactly.
struct ExperimentSpec {
  std::string command = "sample";
  SampleConfig sample;
  std::size_t k = 3;
  std::size_t trials = 1000;
  std::string format = "cotree";
  std::string output;
  std::vector<std::string> metrics;
  std::map<std::string, double> tolerances;

  friend bool operator==(const ExperimentSpec&, const ExperimentSpec&) = default;
};

void to_json(nlohmann::json& j, const SampleConfig& c);
void from_json(const nlohmann::json& j, SampleConfig& c);
void to_json(nlohmann::json& j, const ExperimentSpec& s);
/// Missing fields keep their defaults.
void from_json(const nlohmann::json& j, ExperimentSpec& s);

bool operator==(const SampleConfig& a, const SampleConfig& b);

}  // namespace cograph
