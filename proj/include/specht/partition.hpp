#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace specht {

// A weakly decreasing sequence of positive integers. Trailing zeros passed
// to the constructor are dropped so formulas like (n-j, j) work at j = 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int n() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  // 1-based row length; 0 past the last row.
  int part(int i) const;
  // 1-based column length (the transpose's parts).
  int column(int j) const;

  Partition transpose() const;
  bool is_symmetric() const { return transpose() == *this; }
  bool is_rectangle() const;

  // "3,2,1"; the empty partition prints as "0".
  std::string to_string() const;

  bool operator==(const Partition&) const = default;
  // Lexicographic on parts, used for map keys.
  std::strong_ordering operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// Accepts "3,2,1", "2^2,1^2", "(3, 2, 1)", "1^4".
Partition parse_partition(std::string_view text);

// All partitions of n in reverse lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);

// Deterministic output order: reverse lexicographic.
bool reverse_lex_less(const Partition& a, const Partition& b);

}  // namespace specht
