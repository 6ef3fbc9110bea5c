#pragma once

#include <functional>
#include <string>
#include <vector>

namespace lrmoc::acceptance {

struct Outcome {
  bool pass = false;
  std::string details;
};

struct Criterion {
  std::string name;
  /// Wall-clock budget in seconds.
  double budget_s;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria();

}  // namespace lrmoc::acceptance
