#include "apw/report.hpp"

#include <algorithm>

namespace apw {

void ExperimentReport::observe(std::int64_t value) {
  ++trials;
  observed_max = observed_max ? std::max(*observed_max, value) : value;
  ++histogram[value];
}

void ExperimentReport::merge(const ExperimentReport& other) {
  trials += other.trials;
  if (other.observed_max) {
    observed_max = observed_max ? std::max(*observed_max, *other.observed_max) : other.observed_max;
  }
  violations += other.violations;
  for (const auto& [value, count] : other.histogram) histogram[value] += count;
  if (!first_violation && other.first_violation) first_violation = other.first_violation;
}

nlohmann::ordered_json ExperimentReport::to_json() const {
  nlohmann::ordered_json j;
  j["experiment"] = experiment;
  auto& params = j["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : parameters) params[key] = value;
  j["trials"] = trials;
  j["observed_max"] = observed_max ? nlohmann::ordered_json(*observed_max) : nullptr;
  j["bound"] = bound;
  j["violations"] = violations;
  j["seed"] = seed;
  auto& hist = j["histogram"] = nlohmann::ordered_json::object();
  for (const auto& [value, count] : histogram) hist[std::to_string(value)] = count;
  j["first_violation"] = first_violation ? nlohmann::ordered_json(*first_violation) : nullptr;
  return j;
}

std::string ExperimentReport::csv_header() {
  return "experiment,parameters,trials,observed_max,bound,violations,seed";
}

std::string ExperimentReport::csv_row() const {
  std::string params;
  for (const auto& [key, value] : parameters) {
    if (!params.empty()) params += ';';
    params += key + '=' + std::to_string(value);
  }
  return experiment + ',' + params + ',' + std::to_string(trials) + ',' +
         (observed_max ? std::to_string(*observed_max) : std::string()) + ',' +
         std::to_string(bound) + ',' + std::to_string(violations) + ',' + std::to_string(seed);
}

}  // namespace apw
