#include "cograph/experiment.hpp"

namespace cograph {

bool operator==(const SampleConfig& a, const SampleConfig& b) {
  return a.n == b.n && a.seed == b.seed && a.kind == b.kind && a.epsilon == b.epsilon && a.p == b.p &&
         a.connected == b.connected && a.max_attempts == b.max_attempts;
}

void to_json(nlohmann::json& j, const SampleConfig& c) {
  j = nlohmann::json{{"n", c.n},
                     {"seed", c.seed},
                     {"kind", std::string(sampler_kind_name(c.kind))},
                     {"epsilon", c.epsilon},
                     {"p", c.p},
                     {"connected", c.connected},
                     {"max_attempts", c.max_attempts}};
}

void from_json(const nlohmann::json& j, SampleConfig& c) {
  c.n = j.value("n", c.n);
  c.seed = j.value("seed", c.seed);
  if (j.contains("kind")) c.kind = parse_sampler_kind(j.at("kind").get<std::string>());
  c.epsilon = j.value("epsilon", c.epsilon);
  c.p = j.value("p", c.p);
  c.connected = j.value("connected", c.connected);
  c.max_attempts = j.value("max_attempts", c.max_attempts);
}

void to_json(nlohmann::json& j, const ExperimentSpec& s) {
  j = nlohmann::json{{"command", s.command}, {"sample", s.sample},   {"k", s.k},
                     {"trials", s.trials},   {"format", s.format},   {"output", s.output},
                     {"metrics", s.metrics}, {"tolerances", s.tolerances}};
}

void from_json(const nlohmann::json& j, ExperimentSpec& s) {
  s.command = j.value("command", s.command);
  if (j.contains("sample")) j.at("sample").get_to(s.sample);
  s.k = j.value("k", s.k);
  s.trials = j.value("trials", s.trials);
  s.format = j.value("format", s.format);
  s.output = j.value("output", s.output);
  s.metrics = j.value("metrics", s.metrics);
  s.tolerances = j.value("tolerances", s.tolerances);
}

}  // namespace cograph
