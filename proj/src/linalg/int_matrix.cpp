#include "specht/int_matrix.hpp"

#include "json.hpp"

#include "specht/errors.hpp"

namespace specht {

IntMatrix IntMatrix::identity(std::size_t k) {
  IntMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  IntMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw DomainError("ragged matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<Int>> big;
  for (const auto& r : rows) {
    std::vector<Int> br;
    for (long long v : r) br.emplace_back(static_cast<long>(v));
    big.push_back(std::move(br));
  }
  return from_rows(big);
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_};
}

std::vector<Int> IntMatrix::col(std::size_t j) const {
  std::vector<Int> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw DomainError("matrix shapes do not match");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) mpz_addmul(r(i, j).get_mpz_t(), a.get_mpz_t(), o(k, j).get_mpz_t());
    }
  return r;
}

std::vector<Int> IntMatrix::operator*(const std::vector<Int>& v) const {
  if (cols_ != v.size()) throw DomainError("matrix-vector shapes do not match");
  std::vector<Int> r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) mpz_addmul(r[i].get_mpz_t(), (*this)(i, k).get_mpz_t(), v[k].get_mpz_t());
  return r;
}

IntMatrix IntMatrix::scaled(const Int& c) const {
  IntMatrix r = *this;
  for (auto& x : r.data_) x *= c;
  return r;
}

std::string matrix_to_json(const IntMatrix& m) {
  nlohmann::json j = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_decimal(m(i, k)));
    j.push_back(std::move(row));
  }
  return j.dump();
}

IntMatrix matrix_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("matrix json: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("matrix json must be an array of arrays");
  std::vector<std::vector<Int>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw ParseError("matrix json must be an array of arrays");
    std::vector<Int> row;
    for (const auto& x : r) {
      if (x.is_string()) row.push_back(from_decimal(x.get<std::string>()));
      else if (x.is_number_integer()) row.emplace_back(static_cast<long>(x.get<long long>()));
      else throw ParseError("matrix entries must be decimal strings");
    }
    rows.push_back(std::move(row));
  }
  if (!rows.empty())
    for (const auto& r : rows)
      if (r.size() != rows[0].size()) throw ParseError("ragged matrix");
  return IntMatrix::from_rows(rows);
}

}  // namespace specht
