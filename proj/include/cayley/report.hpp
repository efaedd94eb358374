#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace cayley {

/// One re-derived equation and whether it held.
struct Check {
  std::string id;
  std::string detail;
  bool passed = false;
};

struct Report {
  std::vector<Check> checks;

  void add(std::string id, bool passed, std::string detail = {}) {
    checks.push_back({std::move(id), std::move(detail), passed});
  }
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
  /// nullptr when every check passed.
  const Check* first_failure() const {
    auto it = std::find_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; });
    return it == checks.end() ? nullptr : &*it;
  }
  const Check* find(const std::string& id) const {
    auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.id == id; });
    return it == checks.end() ? nullptr : &*it;
  }
};

}  // namespace cayley
