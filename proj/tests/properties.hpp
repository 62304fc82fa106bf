#pragma once

// Randomized property checks shared by the property test driver and the
// acceptance binary. Each case draws from its own generator seeded by
// (suite seed, case index), so a reported failure is replayable in isolation.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace props {

struct Outcome {
  std::string name;
  int cases = 0;       // cases actually run
  int failures = 0;
  std::string first_failure;  // "case 17: ..." when failures > 0
  bool ok() const { return failures == 0; }
};

/// A check returns nullopt on success or a description of the counterexample.
using Check = std::function<std::optional<std::string>(std::mt19937_64&)>;

Outcome for_all(const std::string& name, int cases, std::uint64_t seed, const Check& check);

struct Property {
  std::string name;
  std::function<Outcome()> run;
};

/// Every property of the suite; each runs at least `min_cases` cases.
std::vector<Property> all_properties(int min_cases = 200);

}  // namespace props
