#pragma once

#include "krel/generators.hpp"
#include "krel/json_io.hpp"

namespace krel {

struct PropertyReport {
  std::string suiteId;
  std::uint64_t seed = 0;
  int trials = 0;
  int maxDim = 0;
  int entryBound = 0;
  int failures = 0;
  int heldTrials = 0;
  std::string status;  // PASS | FAIL | HYPOTHESIS-STARVED
  std::optional<Json> firstCounterexample;
  double elapsedSeconds = 0.0;
};

/// Canonical JSON line; elapsed time is deliberately excluded so identical
/// (suite, seed, trials, maxDim) runs serialize byte-for-byte identically.
Json reportToJson(const PropertyReport& r);

std::vector<std::string> registeredSuites();

/// Deterministic given the config; failures carry a replayable counterexample
/// document holding the serialized instances and the failing check id.
PropertyReport runSuite(const std::string& suiteId, const GeneratorConfig& cfg);

/// Re-runs the stored check on the stored instances.
PropertyReport replayCounterexample(const Json& counterexampleDoc);

}  // namespace krel
