#include "specht/tableau.hpp"

#include <algorithm>

#include "specht/errors.hpp"

namespace specht {

namespace {

Partition shape_of(const std::vector<std::vector<int>>& rows) {
  std::vector<int> parts;
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  return Partition(parts);
}

void check_entries(const std::vector<std::vector<int>>& rows, int n) {
  std::vector<char> seen(n + 1, 0);
  for (const auto& r : rows)
    for (int v : r) {
      if (v < 1 || v > n || seen[v]) throw DomainError("tableau entries must be 1..n, each once");
      seen[v] = 1;
    }
}

}  // namespace

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  shape_ = shape_of(rows_);
  check_entries(rows_, shape_.n());
}

Tableau Tableau::from_columns(const std::vector<std::vector<int>>& columns) {
  std::vector<std::vector<int>> rows;
  for (const auto& col : columns) {
    if (rows.size() < col.size()) rows.resize(col.size());
    for (std::size_t r = 0; r < col.size(); ++r) rows[r].push_back(col[r]);
  }
  for (std::size_t c = 1; c < columns.size(); ++c)
    if (columns[c].size() > columns[c - 1].size()) throw DomainError("column lengths must weakly decrease");
  return Tableau(std::move(rows));
}

std::vector<int> Tableau::column(int c) const {
  std::vector<int> out;
  for (const auto& r : rows_)
    if (static_cast<int>(r.size()) > c) out.push_back(r[c]);
  return out;
}

bool Tableau::is_standard() const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j > 0 && rows_[i][j - 1] > rows_[i][j]) return false;
      if (i > 0 && rows_[i - 1][j] > rows_[i][j]) return false;
    }
  return true;
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> w;
  for (const auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
  return w;
}

std::string Tableau::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += " / ";
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j) s += ' ';
      s += std::to_string(rows_[i][j]);
    }
  }
  return s;
}

Tabloid::Tabloid(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  for (auto& r : rows_) std::sort(r.begin(), r.end());
  check_entries(rows_, shape_of(rows_).n());
}

Partition Tabloid::shape() const { return shape_of(rows_); }

std::string Tabloid::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += " | ";
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j) s += ' ';
      s += std::to_string(rows_[i][j]);
    }
  }
  return s + "}";
}

namespace {

void fill(const Partition& shape, int next, std::vector<std::vector<int>>& rows, std::vector<Tableau>& out) {
  if (next > shape.n()) {
    out.emplace_back(rows);
    return;
  }
  for (int i = 0; i < shape.length(); ++i) {
    int len = static_cast<int>(rows[i].size());
    if (len == shape.part(i + 1)) continue;
    if (i > 0 && static_cast<int>(rows[i - 1].size()) <= len) continue;
    rows[i].push_back(next);
    fill(shape, next + 1, rows, out);
    rows[i].pop_back();
  }
}

}  // namespace

std::vector<Tableau> standard_tableaux(const Partition& shape) {
  std::vector<Tableau> out;
  std::vector<std::vector<int>> rows(shape.length());
  fill(shape, 1, rows, out);
  std::sort(out.begin(), out.end(),
            [](const Tableau& a, const Tableau& b) { return a.reading_word() < b.reading_word(); });
  return out;
}

}  // namespace specht
