#include "specht/tabloid_vector.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "specht/errors.hpp"

namespace specht {

TabloidKey encode_tabloid(const Tabloid& t) {
  TabloidKey k = 0;
  int n = t.shape().n();
  if (n > kMaxTabloidSize || t.rows().size() > 16) throw DomainError("tabloids are limited to n <= 16");
  for (std::size_t r = 0; r < t.rows().size(); ++r)
    for (int v : t.rows()[r]) k |= static_cast<TabloidKey>(r) << (4 * (v - 1));
  return k;
}

Tabloid decode_tabloid(TabloidKey key, int n) {
  std::vector<std::vector<int>> rows;
  for (int v = 1; v <= n; ++v) {
    std::size_t r = (key >> (4 * (v - 1))) & 0xF;
    if (rows.size() <= r) rows.resize(r + 1);
    rows[r].push_back(v);
  }
  return Tabloid(rows);
}

void TabloidVector::require_same_shape(const TabloidVector& o) const {
  if (!(shape_ == o.shape_)) throw DomainError("tabloid vectors of different shapes");
}

void TabloidVector::add(TabloidKey k, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Int TabloidVector::coefficient(TabloidKey k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Int(0) : it->second;
}

Int TabloidVector::coefficient(const Tabloid& t) const { return coefficient(encode_tabloid(t)); }

std::vector<std::pair<Tabloid, Int>> TabloidVector::sorted_terms() const {
  std::vector<std::pair<Tabloid, Int>> out;
  for (const auto& [k, c] : terms_) out.emplace_back(decode_tabloid(k, shape_.n()), c);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

TabloidVector& TabloidVector::operator+=(const TabloidVector& o) {
  require_same_shape(o);
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

TabloidVector& TabloidVector::operator-=(const TabloidVector& o) {
  require_same_shape(o);
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

TabloidVector& TabloidVector::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

Int pair(const TabloidVector& a, const TabloidVector& b) {
  if (!(a.shape() == b.shape())) throw DomainError("pairing vectors of different shapes");
  const auto& small = a.terms().size() <= b.terms().size() ? a : b;
  const auto& large = &small == &a ? b : a;
  Int s = 0;
  for (const auto& [k, c] : small.terms()) {
    auto it = large.terms().find(k);
    if (it != large.terms().end()) s += c * it->second;
  }
  return s;
}

TabloidVector act(const TabloidVector& v, const std::vector<int>& sigma) {
  const int n = v.shape().n();
  if (static_cast<int>(sigma.size()) != n) throw DomainError("permutation has the wrong degree");
  std::vector<char> seen(n + 1, 0);
  for (int x : sigma) {
    if (x < 1 || x > n || seen[x]) throw DomainError("not a permutation");
    seen[x] = 1;
  }
  TabloidVector out(v.shape());
  for (const auto& [k, c] : v.terms()) {
    TabloidKey nk = 0;
    for (int x = 1; x <= n; ++x) nk |= ((k >> (4 * (x - 1))) & 0xF) << (4 * (sigma[x - 1] - 1));
    out.add(nk, c);
  }
  return out;
}

int SignedExpansion::sign_of(TabloidKey k) const {
  auto it = std::lower_bound(keys.begin(), keys.end(), k);
  if (it == keys.end() || *it != k) return 0;
  return signs[it - keys.begin()];
}

namespace {

int permutation_sign(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

// Each arrangement of one column: partial key and sign.
std::vector<std::pair<TabloidKey, std::int8_t>> column_arrangements(const std::vector<int>& col) {
  std::vector<int> idx(col.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::pair<TabloidKey, std::int8_t>> out;
  do {
    TabloidKey k = 0;
    for (std::size_t r = 0; r < idx.size(); ++r) k |= static_cast<TabloidKey>(r) << (4 * (col[idx[r]] - 1));
    out.emplace_back(k, static_cast<std::int8_t>(permutation_sign(idx)));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

}  // namespace

SignedExpansion expand_signed(const Tableau& t) {
  if (t.shape().n() > kMaxTabloidSize || t.shape().length() > 16) throw DomainError("tableaux are limited to n <= 16");
  std::vector<std::vector<std::pair<TabloidKey, std::int8_t>>> cols;
  std::size_t total = 1;
  for (int c = 0; c < t.num_columns(); ++c) {
    cols.push_back(column_arrangements(t.column(c)));
    total *= cols.back().size();
  }
  std::vector<std::pair<TabloidKey, std::int8_t>> terms;
  terms.reserve(total);
  terms.emplace_back(0, 1);
  for (const auto& arr : cols) {
    std::vector<std::pair<TabloidKey, std::int8_t>> next;
    next.reserve(terms.size() * arr.size());
    for (const auto& [k, s] : terms)
      for (const auto& [ck, cs] : arr) next.emplace_back(k | ck, static_cast<std::int8_t>(s * cs));
    terms = std::move(next);
  }
  std::sort(terms.begin(), terms.end());
  SignedExpansion e;
  e.keys.reserve(terms.size());
  e.signs.reserve(terms.size());
  for (const auto& [k, s] : terms) {
    e.keys.push_back(k);
    e.signs.push_back(s);
  }
  return e;
}

std::int64_t pair_signed(const SignedExpansion& a, const SignedExpansion& b) {
  std::int64_t s = 0;
  std::size_t i = 0, j = 0;
  const std::size_t na = a.keys.size(), nb = b.keys.size();
  while (i < na && j < nb) {
    if (a.keys[i] < b.keys[j]) ++i;
    else if (b.keys[j] < a.keys[i]) ++j;
    else {
      s += a.signs[i] * b.signs[j];
      ++i;
      ++j;
    }
  }
  return s;
}

TabloidVector expand_polytabloid(const Tableau& t) {
  SignedExpansion e = expand_signed(t);
  TabloidVector v(t.shape());
  for (std::size_t i = 0; i < e.keys.size(); ++i) v.add(e.keys[i], e.signs[i]);
  return v;
}

TabloidVector row_symmetrize(const Tableau& t) {
  TabloidVector sum(t.shape());
  std::vector<std::vector<int>> rows = t.rows();
  for (auto& r : rows) std::sort(r.begin(), r.end());
  const std::size_t R = rows.size();
  std::vector<std::vector<int>> cur = rows;
  // sigma permutes each row: sigma(rows[r][j]) = cur[r][j]
  auto emit = [&]() {
    std::vector<int> image(t.shape().n() + 1);
    for (std::size_t r = 0; r < R; ++r)
      for (std::size_t j = 0; j < rows[r].size(); ++j) image[rows[r][j]] = cur[r][j];
    std::vector<std::vector<int>> moved = t.rows();
    for (auto& row : moved)
      for (auto& x : row) x = image[x];
    sum += expand_polytabloid(Tableau(moved));
  };
  std::function<void(std::size_t)> rec = [&](std::size_t r) {
    if (r == R) {
      emit();
      return;
    }
    std::sort(cur[r].begin(), cur[r].end());
    do {
      rec(r + 1);
    } while (std::next_permutation(cur[r].begin(), cur[r].end()));
  };
  rec(0);
  return sum;
}

}  // namespace specht
