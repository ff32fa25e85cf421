#pragma once

#include <compare>
#include <string>
#include <vector>

#include "specht/partition.hpp"

namespace specht {

// A filling of a Young diagram with 1..n, stored row by row.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows);
  static Tableau from_columns(const std::vector<std::vector<int>>& columns);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  // 0-based column index.
  std::vector<int> column(int c) const;
  int num_columns() const { return shape_.part(1); }

  bool is_standard() const;
  std::vector<int> reading_word() const;
  std::string to_string() const;

  bool operator==(const Tableau&) const = default;

 private:
  std::vector<std::vector<int>> rows_;
  Partition shape_;
};

// Row-equivalence class of a tableau: each row kept as a sorted set.
class Tabloid {
 public:
  Tabloid() = default;
  explicit Tabloid(std::vector<std::vector<int>> rows);
  static Tabloid of(const Tableau& t) { return Tabloid(t.rows()); }

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  std::string to_string() const;

  bool operator==(const Tabloid&) const = default;
  // Lexicographic on the concatenated rows.
  std::strong_ordering operator<=>(const Tabloid& o) const { return rows_ <=> o.rows_; }

 private:
  std::vector<std::vector<int>> rows_;
};

// Standard tableaux of the given shape, ordered by reading word.
std::vector<Tableau> standard_tableaux(const Partition& shape);

}  // namespace specht
