#include "specht/diagram_ops.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "specht/errors.hpp"

namespace specht {

RegularityInfo regularity(const Partition& lambda, int p) {
  if (p < 2) throw DomainError("regularity needs a prime");
  RegularityInfo info;
  info.is_regular = true;
  for (int i = 1; i <= lambda.part(1); ++i)
    if (lambda.column(i) - lambda.column(i + 1) >= p) info.is_regular = false;

  // ladder value of cell (i, j) is i + (p-1)(j-1)
  std::map<int, int> per_ladder;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) ++per_ladder[i + (p - 1) * (j - 1)];

  std::vector<int> rows(lambda.n() + 1, 0);
  std::vector<std::vector<char>> filled(lambda.n() + 2, std::vector<char>(lambda.n() + 2, 0));
  for (auto [ladder, count] : per_ladder) {
    // positions top-down: largest column first
    int placed = 0;
    for (int j = (ladder - 1) / (p - 1) + 1; j >= 1 && placed < count; --j) {
      int i = ladder - (p - 1) * (j - 1);
      if (i < 1) continue;
      if (i > lambda.n() || j > lambda.n()) throw InconsistencyError("ladder placement left the diagram");
      filled[i][j] = 1;
      ++placed;
    }
    if (placed != count) throw InconsistencyError("ladder too short during regularization");
  }
  std::vector<int> parts;
  for (int i = 1; i <= lambda.n(); ++i) {
    int len = 0;
    while (len + 1 <= lambda.n() && filled[i][len + 1]) ++len;
    for (int j = len + 1; j <= lambda.n(); ++j)
      if (filled[i][j]) throw InconsistencyError("regularization produced a non-diagram");
    if (len == 0) break;
    parts.push_back(len);
  }
  info.regularized = Partition(parts);
  if (info.regularized.n() != lambda.n()) throw InconsistencyError("regularization lost nodes");
  return info;
}

Partition carter_payne_shift(const Partition& mu, int j) {
  if (j < 1 || j > mu.part(2)) throw DomainError("shift column must lie in [1, mu_2]");
  int s = mu.column(j);
  std::vector<int> parts = mu.parts();
  parts[0] = mu.part(1) + mu.part(s) - j + 1;
  parts[s - 1] = j - 1;
  return Partition(parts);
}

int cell_hook_length(const Partition& lambda, int i, int t) {
  if (i < 1 || t < 1 || t > lambda.part(i)) throw DomainError("cell outside the diagram");
  return lambda.part(i) - t + lambda.column(t) - i + 1;
}

Partition strip_skew_hook(const Partition& lambda, int i, int t) {
  int h = cell_hook_length(lambda, i, t);
  int k = lambda.length();
  std::vector<int> beta(k);
  for (int r = 1; r <= k; ++r) beta[r - 1] = lambda.part(r) + k - r;
  beta[i - 1] -= h;
  if (beta[i - 1] < 0 || std::count(beta.begin(), beta.end(), beta[i - 1]) > 1)
    throw InconsistencyError("rim hook removal failed");
  std::sort(beta.rbegin(), beta.rend());
  std::vector<int> parts(k);
  for (int r = 1; r <= k; ++r) parts[r - 1] = beta[r - 1] - (k - r);
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  if (parts.empty()) parts.push_back(0);
  parts[0] += h;
  return Partition(parts);
}

}  // namespace specht
