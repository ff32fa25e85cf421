#include "specht/partition.hpp"

#include <algorithm>
#include <charconv>

#include "specht/errors.hpp"

namespace specht {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
    n_ += parts_[i];
  }
}

int Partition::part(int i) const {
  if (i < 1 || i > length()) return 0;
  return parts_[i - 1];
}

int Partition::column(int j) const {
  int c = 0;
  for (int p : parts_)
    if (p >= j) ++c;
  return j < 1 ? 0 : c;
}

Partition Partition::transpose() const {
  std::vector<int> t;
  int cols = parts_.empty() ? 0 : parts_[0];
  for (int j = 1; j <= cols; ++j) t.push_back(column(j));
  return Partition(std::move(t));
}

bool Partition::is_rectangle() const {
  return !parts_.empty() && parts_.front() == parts_.back();
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

namespace {

int parse_int(std::string_view tok, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("malformed partition '" + std::string(whole) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  std::string_view s = trim(text);
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = trim(s.substr(1, s.size() - 2));
  if (s.empty()) throw ParseError("empty partition");
  std::vector<int> parts;
  while (!s.empty()) {
    auto comma = s.find(',');
    std::string_view tok = trim(s.substr(0, comma));
    s = comma == std::string_view::npos ? std::string_view() : s.substr(comma + 1);
    if (comma != std::string_view::npos && trim(s).empty()) throw ParseError("trailing comma in '" + std::string(text) + "'");
    auto caret = tok.find('^');
    int value, mult = 1;
    if (caret == std::string_view::npos) {
      value = parse_int(tok, text);
    } else {
      value = parse_int(trim(tok.substr(0, caret)), text);
      mult = parse_int(trim(tok.substr(caret + 1)), text);
      if (mult < 1) throw ParseError("exponent must be positive in '" + std::string(text) + "'");
    }
    if (value < 1) throw ParseError("parts must be positive in '" + std::string(text) + "'");
    parts.insert(parts.end(), mult, value);
  }
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1]) throw ParseError("parts must be weakly decreasing in '" + std::string(text) + "'");
  return Partition(std::move(parts));
}

namespace {

void gen(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    cur.push_back(k);
    gen(remaining - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw DomainError("negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen(n, n, cur, out);
  return out;
}

bool reverse_lex_less(const Partition& a, const Partition& b) { return a.parts() > b.parts(); }

}  // namespace specht
