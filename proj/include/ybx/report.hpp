#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace ybx {

// Uniform pass/fail reporting for the verification suites. Renders as one
// line per check, or as a JSON-ready structure via the CLI.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;  // empty on pass
};

struct CheckReport {
  std::vector<CheckResult> checks;

  void add(const std::string& name, bool pass, const std::string& witness = "") {
    checks.push_back({name, pass, pass ? "" : witness});
  }
  void merge(const CheckReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::string render() const {
    std::ostringstream os;
    for (const auto& c : checks) {
      os << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
      if (!c.pass && !c.witness.empty()) os << "  (" << c.witness << ")";
      os << "\n";
    }
    return os.str();
  }
};

}  // namespace ybx
