#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gkmkit/weight.hpp"

namespace gkmkit {

/// One machine-readable reason a check failed.
struct Witness {
  std::string point;                 // fixed-point id, when the failure is local to a point
  std::optional<Weight> weight;      // offending weight
  std::optional<std::size_t> edge;   // offending edge index
  std::string message;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::vector<Witness> witnesses;    // empty iff passed
  std::vector<std::string> evidence; // informational output, e.g. matchings found
  std::string note;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
  void append(const ValidationReport& other);
  std::string to_string() const;
};

/// Convenience for building single-check reports.
ValidationReport single_check(CheckResult result);

}  // namespace gkmkit
