#include "specht/hook_forms.hpp"

#include <algorithm>
#include <functional>

#include "specht/diagram_ops.hpp"
#include "specht/errors.hpp"
#include "specht/two_row.hpp"

namespace specht {

namespace {

void check(int n, int l) {
  if (n < 1 || l < 0 || l > n - 1) throw DomainError("hook needs n >= 1 and 0 <= l <= n-1");
}

// increasing k-subsets of [lo, hi], lexicographic
std::vector<std::vector<int>> subsets(int lo, int hi, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= hi; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  if (k >= 0) rec(lo);
  return out;
}

Partition regularized_hook(int n, int j, unsigned long p) {
  return regularity(hook_partition(n, j), static_cast<int>(p)).regularized;
}

}  // namespace

Partition hook_partition(int n, int l) {
  check(n, l);
  std::vector<int> parts{n - l};
  parts.insert(parts.end(), l, 1);
  return Partition(parts);
}

GroupDecomposition hook_group(int n, int l) {
  check(n, l);
  Int f = factorial(l);
  return normalize_group({{f, binomial(n - 2, l).get_ui()}, {f * n, binomial(n - 2, l - 1).get_ui()}});
}

Int hook_order(int n, int l) {
  check(n, l);
  Int a, b;
  mpz_pow_ui(a.get_mpz_t(), factorial(l).get_mpz_t(), binomial(n - 1, l).get_ui());
  mpz_ui_pow_ui(b.get_mpz_t(), n, binomial(n - 2, l - 1).get_ui());
  return a * b;
}

FormalSum hook_layers(int n, int l, unsigned long p) {
  check(n, l);
  if (!is_prime(p)) throw DomainError("p must be prime");
  FormalSum s;
  const int vl = valuation(factorial(l), p);
  if (p >= 3) {
    if (n % p != 0) {
      s.add(1, regularized_hook(n, l, p), vl);
    } else if (l == 0) {
      s.add(1, Partition({n}), 0);
    } else if (l == n - 1) {
      s.add(1, regularized_hook(n, n - 1, p), valuation(factorial(n), p));
    } else {
      const int cut = n - n / static_cast<int>(p);
      const int j1 = l + (l >= cut ? 1 : 0);
      const int j2 = (l - 1) + (l - 1 >= cut ? 1 : 0);
      s.add(1, regularized_hook(n, j1, p), vl);
      s.add(1, regularized_hook(n, j2, p), vl + valuation(static_cast<long long>(n), p));
    }
    return s;
  }
  const int vn = valuation(static_cast<long long>(n), 2);
  // for 2l >= n-1 this reads the transposed hook (l+1, 1^{n-l-1})
  const int top = 2 * l <= n - 1 ? l : n - l - 1;
  for (int j = 0; j <= top; ++j) {
    long mult = f2_sum(n - 2 * j, top - j);
    s.add(mult, Partition({n - j, j}), vl + ((l - j) % 2 != 0 ? vn : 0));
  }
  return s;
}

TabloidVector hook_polytabloid(int n, const std::vector<int>& first_column) {
  std::vector<char> used(n + 1, 0);
  for (int v : first_column) {
    if (v < 1 || v > n || used[v]) throw DomainError("hook column entries must be distinct in [1, n]");
    used[v] = 1;
  }
  std::vector<std::vector<int>> cols{first_column};
  for (int v = 1; v <= n; ++v)
    if (!used[v]) cols.push_back({v});
  return expand_polytabloid(Tableau::from_columns(cols));
}

HookBases hook_trigonal_bases(int n, int l) {
  check(n, l);
  if (n < 2) throw DomainError("trigonal hook bases need n >= 2");
  HookBases hb;
  for (const auto& b : subsets(2, n - 1, l)) {
    std::vector<int> xc{n}, yc{1};
    xc.insert(xc.end(), b.begin(), b.end());
    yc.insert(yc.end(), b.begin(), b.end());
    hb.x.push_back(hook_polytabloid(n, xc));
    hb.y.push_back(hook_polytabloid(n, yc));
    hb.y_columns.push_back(yc);
  }
  for (const auto& d : subsets(2, n - 1, l - 1)) {
    TabloidVector sum(hook_partition(n, l));
    for (int s = 1; s <= n - 1; ++s) {
      if (std::find(d.begin(), d.end(), s) != d.end()) continue;
      std::vector<int> col{s};
      col.insert(col.end(), d.begin(), d.end());
      col.push_back(n);
      sum += hook_polytabloid(n, col);
    }
    std::vector<int> yc{1};
    yc.insert(yc.end(), d.begin(), d.end());
    yc.push_back(n);
    hb.x.push_back(sum);
    hb.y.push_back(hook_polytabloid(n, yc));
    hb.y_columns.push_back(yc);
  }
  return hb;
}

}  // namespace specht
