#pragma once

#include <string>
#include <vector>

namespace wrep {

/// One failed instance of a check, with a concrete location.
struct Violation {
  std::string check;     // e.g. "identity(4)", "associativity"
  std::string location;  // e.g. "(g,g,g)", "fiber g / basis 1"
  std::string expected;
  std::string actual;
};

struct Report {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string check, std::string location, std::string expected = {}, std::string actual = {}) {
    violations.push_back({std::move(check), std::move(location), std::move(expected), std::move(actual)});
  }
  void merge(const Report& other, const std::string& prefix = {}) {
    for (const auto& v : other.violations)
      violations.push_back({prefix + v.check, v.location, v.expected, v.actual});
  }
  bool mentions(const std::string& check) const {
    for (const auto& v : violations)
      if (v.check == check) return true;
    return false;
  }
};

}  // namespace wrep
