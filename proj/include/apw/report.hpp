#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace apw {

// Aggregate of a randomized or exhaustive sweep. Partial reports from
// independent chunks merge by sum (counts) and max (observed_max).
struct ExperimentReport {
  std::string experiment;
  std::vector<std::pair<std::string, std::int64_t>> parameters;
  std::uint64_t trials = 0;
  std::optional<std::int64_t> observed_max;
  std::int64_t bound = 0;
  std::uint64_t violations = 0;
  std::uint64_t seed = 0;
  std::map<std::int64_t, std::uint64_t> histogram;
  // Offending sample of the earliest violating chunk, in canonical word form.
  std::optional<std::string> first_violation;

  void observe(std::int64_t value);
  // `other` must come from a later chunk than anything merged so far.
  void merge(const ExperimentReport& other);

  nlohmann::ordered_json to_json() const;
  static std::string csv_header();
  std::string csv_row() const;
};

}  // namespace apw
