#include "specht/two_column.hpp"

#include <algorithm>

#include "specht/errors.hpp"

namespace specht {

namespace {

Tableau two_column_tableau(int n, const std::vector<int>& second) {
  std::vector<char> used(n + 1, 0);
  for (int v : second) {
    if (v < 1 || v > n || used[v]) throw DomainError("second column entries must be distinct in [1, n]");
    used[v] = 1;
  }
  std::vector<int> first;
  for (int v = 1; v <= n; ++v)
    if (!used[v]) first.push_back(v);
  if (first.size() < second.size()) throw DomainError("second column longer than the first");
  std::vector<std::vector<int>> cols{first};
  if (!second.empty()) cols.push_back(second);
  return Tableau::from_columns(cols);
}

std::string label(const std::vector<int>& second) {
  std::string s = "<";
  for (std::size_t i = 0; i < second.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(second[i]);
  }
  return s + ">";
}

void require_min_n(int n) {
  if (n < 6) throw DomainError("the (2^2,1^{n-4}) closed form needs n >= 6");
}

}  // namespace

Partition two_column_partition(int n, int h) {
  if (h < 0 || 2 * h > n) throw DomainError("need 0 <= h <= n/2");
  std::vector<int> parts(h, 2);
  parts.insert(parts.end(), n - 2 * h, 1);
  return Partition(parts);
}

TabloidVector two_column_polytabloid(int n, const std::vector<int>& second) {
  return expand_polytabloid(two_column_tableau(n, second));
}

TabloidVector two_column_row_symmetrized(int n, const std::vector<int>& second) {
  return row_symmetrize(two_column_tableau(n, second));
}

Int two_column_entry(int n, int h, const std::vector<int>& xi, const std::vector<int>& eta) {
  if (h < 0 || 2 * h > n || static_cast<int>(xi.size()) != h || static_cast<int>(eta.size()) != h)
    throw DomainError("second columns must have length h <= n/2");
  for (const auto* v : {&xi, &eta}) {
    if (!std::is_sorted(v->begin(), v->end()) || std::adjacent_find(v->begin(), v->end()) != v->end())
      throw DomainError("second columns must be strictly increasing");
    for (int x : *v)
      if (x < 1 || x > n) throw DomainError("second column entry out of range");
  }
  int i = 0, sum = 0;
  for (int x : xi) {
    sum += x;
    if (std::find(eta.begin(), eta.end(), x) != eta.end()) ++i;
  }
  for (int x : eta) sum += x;
  Int v = factorial(h - i) * factorial(n - 2 * h + i) / factorial(n - 2 * h);
  return (h - i + sum) % 2 ? Int(-v) : v;
}

GroupDecomposition two_column_22_group(int n) {
  require_min_n(n);
  const Int base = 2 * factorial(n - 4);
  const bool odd = n % 2 == 1;
  return normalize_group({
      {base * (odd ? 2 : 1), 1},
      {base * (n - 1), static_cast<std::uint64_t>(n - 3)},
      {base * (n - 1) * (odd ? 1 : 2), 1},
      {base * (n - 1) * (n - 2), static_cast<std::uint64_t>((n * n - 5 * n + 2) / 2)},
  });
}

Int two_column_22_order(int n) {
  require_min_n(n);
  Int a, b, c;
  mpz_pow_ui(a.get_mpz_t(), Int(2 * factorial(n - 4)).get_mpz_t(), (n * n - 3 * n) / 2);
  mpz_ui_pow_ui(b.get_mpz_t(), n - 1, (n * n - 3 * n - 2) / 2);
  mpz_ui_pow_ui(c.get_mpz_t(), n - 2, (n * n - 5 * n + 2) / 2);
  return a * b * c * 2;
}

PairedBases two_column_22_bases(int n) {
  require_min_n(n);
  PairedBases pb;
  auto P = [n](int a, int b) { return two_column_polytabloid(n, {a, b}); };
  auto R = [n](int a, int b) { return two_column_row_symmetrized(n, {a, b}); };
  // pairs in [2, n-2] other than (2,3), c descending then b descending
  std::vector<std::pair<int, int>> tail;
  for (int c = n - 2; c >= 2; --c)
    for (int b = c - 1; b >= 2; --b)
      if (!(b == 2 && c == 3)) tail.emplace_back(b, c);

  for (int i = 1; i <= n - 2; ++i) {
    pb.y.push_back(P(n - i, n));
    pb.y_labels.push_back(label({n - i, n}));
  }
  for (int i = 1; i <= n - 3; ++i) {
    pb.y.push_back(P(n - 1 - i, n - 1));
    pb.y_labels.push_back(label({n - 1 - i, n - 1}));
  }
  for (auto [b, c] : tail) {
    pb.y.push_back(P(b, c));
    pb.y_labels.push_back(label({b, c}));
  }

  const bool odd = n % 2 == 1;
  if (odd) {
    pb.x.push_back(P(3, 4));
    pb.x_labels.push_back("<3,4>");
  } else {
    pb.x.push_back(P(3, n) + Int((n - 2) / 2) * P(3, 4));
    pb.x_labels.push_back("<3," + std::to_string(n) + "> + " + std::to_string((n - 2) / 2) + "<3,4>");
  }
  for (int i = 2; i <= n - 2; ++i) {
    Int sign = (n - i) % 2 ? -1 : 1;
    pb.x.push_back(sign * P(1, n - 1) + P(n - i, n - 1));
    pb.x_labels.push_back(std::string(sign < 0 ? "-" : "") + label({1, n - 1}) + " + " + label({n - i, n - 1}));
  }
  {
    Int sign_n = odd ? -1 : 1;
    TabloidVector combo = P(3, n) + sign_n * P(n - 1, n) - Int(n - 3) * P(3, n - 1);
    std::string combo_label = "(<3," + std::to_string(n) + "> " + (odd ? "- " : "+ ") + label({n - 1, n}) + " - " +
                              std::to_string(n - 3) + label({3, n - 1}) + ")";
    if (odd) {
      pb.x.push_back(Int((n - 3) / 2) * R(n - 2, n - 1) - Int((n - 1) / 2) * combo);
      pb.x_labels.push_back(std::to_string((n - 3) / 2) + label({n - 2, n - 1}) + "rho - " + std::to_string((n - 1) / 2) +
                            combo_label);
    } else {
      pb.x.push_back(R(n - 2, n - 1) + combo);
      pb.x_labels.push_back(label({n - 2, n - 1}) + "rho + " + combo_label);
    }
  }
  for (int i = 2; i <= n - 3; ++i) {
    pb.x.push_back(R(n - 1 - i, n - 1));
    pb.x_labels.push_back(label({n - 1 - i, n - 1}) + "rho");
  }
  for (auto [b, c] : tail) {
    pb.x.push_back(R(b, c));
    pb.x_labels.push_back(label({b, c}) + "rho");
  }
  return pb;
}

}  // namespace specht
