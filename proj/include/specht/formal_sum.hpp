#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "specht/jantzen.hpp"
#include "specht/partition.hpp"

namespace specht {

// c [label]_layer; layer is empty for classes of Specht modules.
struct FormalTerm {
  std::int64_t coefficient = 0;
  Partition label;
  std::optional<int> layer;
  bool operator==(const FormalTerm&) const = default;
};

// Element of a Grothendieck group: integer combination of labelled classes.
struct FormalSum {
  std::vector<FormalTerm> terms;

  // Merges with an existing term of the same label and layer; drops zeros.
  void add(std::int64_t coefficient, const Partition& label, std::optional<int> layer = std::nullopt);
  std::int64_t coefficient(const Partition& label, std::optional<int> layer = std::nullopt) const;
  // "3[14]_7 + 2[13,1]_8"
  std::string to_string() const;
  bool operator==(const FormalSum&) const = default;
};

// sum of coefficient * dim(label)
std::int64_t evaluate(const FormalSum& s, const std::function<std::uint64_t(const Partition&)>& dim);

// Layer profile of a sum of simple-module classes, with dim D^label taken
// from the brute-force rank modulo p.
JantzenProfile predicted_profile(const FormalSum& s, unsigned long p);

}  // namespace specht
