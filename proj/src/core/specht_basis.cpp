#include "specht/specht_basis.hpp"

#include <algorithm>
#include <map>

#include "specht/errors.hpp"
#include "specht/hooks.hpp"

namespace specht {

namespace {

std::vector<int> row_sequence(TabloidKey k, int n) {
  std::vector<int> s(n);
  for (int v = 1; v <= n; ++v) s[v - 1] = static_cast<int>((k >> (4 * (v - 1))) & 0xF);
  return s;
}

}  // namespace

SpechtBasis::SpechtBasis(const Partition& lambda) : shape_(lambda), tableaux_(standard_tableaux(lambda)) {
  if (lambda.n() > kMaxTabloidSize) throw DomainError("Specht modules are limited to n <= 16");
  const std::size_t d = tableaux_.size();
  expansions_.reserve(d);
  for (const auto& t : tableaux_) {
    expansions_.push_back(expand_signed(t));
    standard_keys_.push_back(encode_tabloid(Tabloid::of(t)));
  }
  // More dominant tabloids have lexicographically smaller row sequences, and
  // {t} only occurs in e_s when {t} is dominated by {s}.
  order_.resize(d);
  for (std::size_t i = 0; i < d; ++i) order_[i] = i;
  std::vector<std::vector<int>> seq(d);
  for (std::size_t i = 0; i < d; ++i) seq[i] = row_sequence(standard_keys_[i], lambda.n());
  std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return seq[a] < seq[b]; });
  below_.resize(d);
  for (std::size_t a = 0; a < d; ++a) {
    std::size_t t = order_[a];
    for (std::size_t b = 0; b < a; ++b) {
      std::size_t s = order_[b];
      int c = expansions_[s].sign_of(standard_keys_[t]);
      if (c) below_[t].emplace_back(s, c);
    }
    for (std::size_t b = a + 1; b < d; ++b)
      if (expansions_[order_[b]].sign_of(standard_keys_[t]))
        throw InconsistencyError("standard tabloid incidence is not triangular");
    if (expansions_[t].sign_of(standard_keys_[t]) != 1) throw InconsistencyError("polytabloid lost its leading tabloid");
  }
}

TabloidVector SpechtBasis::polytabloid(std::size_t i) const {
  TabloidVector v(shape_);
  const auto& e = expansions_.at(i);
  for (std::size_t k = 0; k < e.keys.size(); ++k) v.add(e.keys[k], e.signs[k]);
  return v;
}

IntMatrix SpechtBasis::gram(bool scaled) const {
  const std::size_t d = dim();
  IntMatrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      std::int64_t v = pair_signed(expansions_[i], expansions_[j]);
      g(i, j) = static_cast<long>(v);
      g(j, i) = static_cast<long>(v);
    }
  if (!scaled) return g;
  Int f = james_factor(shape_);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (g(i, j) % f != 0) throw InconsistencyError("Gram entry not divisible by the column factor");
      g(i, j) /= f;
    }
  return g;
}

std::vector<Int> SpechtBasis::solve(const std::vector<Int>& rhs) const {
  std::vector<Int> c(dim());
  for (std::size_t t : order_) {
    Int v = rhs[t];
    for (auto [s, sign] : below_[t]) v -= sign * c[s];
    c[t] = v;
  }
  return c;
}

std::vector<Int> SpechtBasis::straighten(const TabloidVector& v, bool verify) const {
  if (!(v.shape() == shape_)) throw DomainError("vector shape differs from the module shape");
  std::vector<Int> rhs(dim());
  for (std::size_t i = 0; i < dim(); ++i) rhs[i] = v.coefficient(standard_keys_[i]);
  std::vector<Int> c = solve(rhs);
  if (verify) {
    TabloidVector back(shape_);
    for (std::size_t i = 0; i < dim(); ++i)
      if (c[i] != 0) back += c[i] * polytabloid(i);
    if (!(back == v)) throw MembershipError("vector is not in the Specht module");
  }
  return c;
}

std::vector<Int> SpechtBasis::standard_coefficients(const SignedExpansion& e) const {
  std::vector<Int> rhs(dim());
  for (std::size_t i = 0; i < dim(); ++i) rhs[i] = e.sign_of(standard_keys_[i]);
  return rhs;
}

std::vector<Int> SpechtBasis::straighten(const Tableau& t) const {
  if (!(t.shape() == shape_)) throw DomainError("tableau shape differs from the module shape");
  return solve(standard_coefficients(expand_signed(t)));
}

std::size_t SpechtBasis::index_of(const Tableau& t) const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (tableaux_[i] == t) return i;
  return dim();
}

const SpechtBasis& specht_basis(const Partition& lambda) {
  static std::mutex mu;
  static std::map<Partition, std::unique_ptr<SpechtBasis>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(lambda); it != cache.end()) return *it->second;
  }
  auto built = std::make_unique<SpechtBasis>(lambda);
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.try_emplace(lambda, std::move(built));
  return *it->second;
}

IntMatrix gram_matrix(const Partition& lambda, bool scaled) { return specht_basis(lambda).gram(scaled); }

IntMatrix pairing_table(const std::vector<TabloidVector>& x, const std::vector<TabloidVector>& y, const Int& divisor) {
  IntMatrix m(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) {
      Int v = pair(x[i], y[j]);
      if (v % divisor != 0) throw InconsistencyError("pairing not divisible by the requested factor");
      m(i, j) = v / divisor;
    }
  return m;
}

}  // namespace specht
