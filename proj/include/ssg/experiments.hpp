#pragma once

#include <string>
#include <vector>

#include "ssg/report.hpp"

namespace ssg {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ExperimentResult {
  std::string name;
  std::string citation;
  std::vector<CheckLine> checks;
  json data = json::object();
  bool passed() const;
  json to_json() const;
};

struct ExperimentOptions {
  unsigned jobs = 1;
};

std::vector<std::string> experiment_names();
// Throws UnknownExperiment.
ExperimentResult run_experiment(const std::string& name, const ExperimentOptions& opts = {});

}  // namespace ssg
