#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shiftdc/parallel.hpp"

namespace shiftdc {

struct PropsOptions {
  std::uint64_t seed = 1;
  /// Cases per property; expensive properties run a tenth of this (rounded up).
  std::size_t cases = 100;
  Exec exec = Exec::Parallel;
  /// Run only properties whose name starts with this prefix.
  std::string filter;
};

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// Smallest failing instance found, at generator size `minimized_size`.
  std::optional<std::string> counterexample;
  int minimized_size = 0;
};

struct PropsSummary {
  std::vector<PropertyResult> results;

  bool passed() const;
  std::size_t total_cases() const;
  std::size_t total_failures() const;
};

std::vector<std::string> property_names();

/**
 * Case i of a property draws from Rng(derive_seed(seed ^ h(name), i)) at
 * generator size 1 + i % 4, so results do not depend on scheduling. A failing
 * case is re-run at every smaller size with the same seed and the smallest
 * failing size is reported.
 */
PropsSummary run_properties(const PropsOptions &opts);

} // namespace shiftdc
