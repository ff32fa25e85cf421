#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace specht::cli {

// Published values that the library can be compared against. Reference-only
// entries are too large to recompute here; they are printed, never checked.
struct Fixture {
  std::string id;
  std::string description;
  std::string expected;  // human-readable expected data
  bool reference_only = false;
  // nullopt on agreement, otherwise a description of the mismatch
  std::function<std::optional<std::string>()> check;
};

const std::vector<Fixture>& fixture_corpus();

}  // namespace specht::cli
