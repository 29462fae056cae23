#pragma once

#include <functional>
#include <string>
#include <vector>

namespace perdoub {

// One verifiable property. `run` returns pass/fail plus a detail line:
// failure context when failing, optionally a short report when passing.
struct CheckOutcome {
  bool pass = true;
  std::string detail;
};

struct PropertyCheck {
  std::string suite;
  std::string name;
  std::function<CheckOutcome()> run;
};

const std::vector<PropertyCheck>& property_checks();
std::vector<std::string> property_suites();

}  // namespace perdoub
