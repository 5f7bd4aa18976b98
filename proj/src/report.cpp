#include "gkmkit/report.hpp"

#include <algorithm>

namespace gkmkit {

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

void ValidationReport::append(const ValidationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string ValidationReport::to_string() const {
  std::string out;
  for (const auto& c : checks) {
    out += (c.passed ? "PASS " : "FAIL ") + c.name;
    if (!c.note.empty()) out += "  (" + c.note + ")";
    out += "\n";
    for (const auto& w : c.witnesses) {
      out += "  -";
      if (!w.point.empty()) out += " point " + w.point;
      if (w.edge) out += " edge " + std::to_string(*w.edge);
      if (w.weight) out += " weight " + w.weight->to_string();
      if (!w.message.empty()) out += ": " + w.message;
      out += "\n";
    }
  }
  return out;
}

ValidationReport single_check(CheckResult result) {
  result.passed = result.witnesses.empty();
  ValidationReport r;
  r.checks.push_back(std::move(result));
  return r;
}

}  // namespace gkmkit
