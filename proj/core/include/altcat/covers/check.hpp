#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace altcat::covers {

/// One certified statement. `detail` carries the residual or the computed
/// value so that a failure points at the first mismatch.
struct CheckResult {
  std::string name;
  std::string citation;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckResult> items;

  bool passed() const {
    return std::all_of(items.begin(), items.end(), [](const CheckResult& c) { return c.pass; });
  }
  explicit operator bool() const { return passed(); }

  void add(std::string name, std::string citation, bool pass, std::string detail = {}) {
    items.push_back({std::move(name), std::move(citation), pass, std::move(detail)});
  }
  void append(const CheckReport& other) {
    items.insert(items.end(), other.items.begin(), other.items.end());
  }
};

}  // namespace altcat::covers
