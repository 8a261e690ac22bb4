#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cograph/checks.hpp"
#include "json.hpp"

using nlohmann::json;

int main(int argc, char** argv) {
  CLI::App app{"Runs every acceptance criterion and prints one line per criterion."};
  std::string data = COGRAPH_ACCEPTANCE_DATA;
  std::vector<int> only;
  unsigned workers = 0;
  std::string report;
  app.add_option("--data", data, "criteria file");
  app.add_option("--only", only, "criterion ids to run")->delimiter(',');
  app.add_option("--workers", workers, "threads (0 = all cores)");
  app.add_option("--report", report, "write the full JSON report here");
  CLI11_PARSE(app, argc, argv);

  std::ifstream in(data);
  if (!in) {
    std::cerr << "cannot open " << data << '\n';
    return 2;
  }
  const json spec = json::parse(in);
  json results = json::array();
  int unexpected = 0;
  for (const auto& c : spec.at("criteria")) {
    const int id = c.at("id");
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    json params = c.value("params", json::object());
    params.emplace("seed", spec.value("seed", 20240601));
    params.emplace("workers", workers);
    const auto allowed = c.value("known_unattainable", std::set<std::string>{});

    cograph::CheckReport r;
    try {
      r = cograph::run_check(c.at("suite"), params);
    } catch (const std::exception& e) {
      std::cout << "FAIL " << id << ' ' << c.at("title").get<std::string>() << ": " << e.what() << std::endl;
      ++unexpected;
      continue;
    }
    bool known_only = true;
    for (const auto& m : r.measurements)
      if (!m.pass && !allowed.contains(m.metric)) known_only = false;
    if (!r.pass() && !known_only) ++unexpected;
    std::cout << (r.pass() ? "PASS " : "FAIL ") << id << ' ' << c.at("title").get<std::string>() << " ("
              << r.seconds << "s): " << r.summary();
    if (!r.pass() && known_only) std::cout << " [known unattainable]";
    std::cout << std::endl;
    json j = r.to_json();
    j["criterion"] = id;
    results.push_back(j);
  }
  if (!report.empty()) std::ofstream(report) << results.dump(2) << '\n';
  return unexpected == 0 ? 0 : 1;
}
