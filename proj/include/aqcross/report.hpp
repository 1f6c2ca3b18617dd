#pragma once
// Per-check verification results, shared by every module's verify routine.

#include <cstdint>
#include <string>
#include <vector>

namespace aqcross {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string expected;  // decimal rendering, exact
  std::string computed;
  std::string detail;    // first counterexample, when any
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::size_t fail_count() const {
    std::size_t k = 0;
    for (const auto& c : checks) k += !c.pass;
    return k;
  }
  void add(std::string name, bool pass, std::string expected = "",
           std::string computed = "", std::string detail = "") {
    checks.push_back({std::move(name), pass, std::move(expected),
                      std::move(computed), std::move(detail)});
  }
  void merge(VerifyReport&& other) {
    for (auto& c : other.checks) checks.push_back(std::move(c));
  }
};

}  // namespace aqcross
