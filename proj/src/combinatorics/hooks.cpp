#include "specht/hooks.hpp"

#include <map>
#include <mutex>

namespace specht {

HookData hook_data(const Partition& lambda) {
  HookData h;
  for (int i = 1; i <= lambda.length(); ++i) {
    std::vector<int> row;
    for (int j = 1; j <= lambda.part(i); ++j)
      row.push_back(lambda.part(i) - j + lambda.column(j) - i + 1);
    h.cell_hooks.push_back(std::move(row));
  }
  for (int j = 1; j <= lambda.part(2); ++j)
    h.first_row.push_back(lambda.part(1) - j + lambda.column(j));
  return h;
}

namespace {

std::uint64_t count_standard(const std::vector<int>& parts, std::map<std::vector<int>, std::uint64_t>& memo) {
  if (parts.empty()) return 1;
  if (auto it = memo.find(parts); it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    bool corner = i + 1 == parts.size() || parts[i + 1] < parts[i];
    if (!corner) continue;
    std::vector<int> smaller = parts;
    if (--smaller[i] == 0) smaller.pop_back();
    total += count_standard(smaller, memo);
  }
  memo.emplace(parts, total);
  return total;
}

}  // namespace

std::uint64_t dim_specht(const Partition& lambda) {
  static std::mutex mu;
  static std::map<std::vector<int>, std::uint64_t> memo;
  std::lock_guard lock(mu);
  return count_standard(lambda.parts(), memo);
}

Int hook_product(const Partition& lambda) {
  Int r = 1;
  for (const auto& row : hook_data(lambda).cell_hooks)
    for (int h : row) r *= h;
  return r;
}

Int james_factor(const Partition& lambda) {
  Int r = 1;
  int cols = lambda.part(1);
  for (int i = 1; i <= cols; ++i) r *= factorial(lambda.column(i) - lambda.column(i + 1));
  return r;
}

Int index_quotient(const Partition& lambda) {
  return factorial(lambda.n()) / Int(static_cast<unsigned long>(dim_specht(lambda)));
}

}  // namespace specht
