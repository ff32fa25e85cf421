#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "specht/arith.hpp"

namespace specht {

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t k);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Int> row(std::size_t i) const;
  std::vector<Int> col(std::size_t j) const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& o) const;
  std::vector<Int> operator*(const std::vector<Int>& v) const;
  IntMatrix scaled(const Int& c) const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

// JSON array-of-arrays of decimal strings.
std::string matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const std::string& text);

}  // namespace specht
