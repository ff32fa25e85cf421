#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "specht/arith.hpp"
#include "specht/tableau.hpp"

namespace specht {

// Tabloids packed as 4 bits per entry: nibble v-1 holds the (0-based) row of v.
using TabloidKey = std::uint64_t;
constexpr int kMaxTabloidSize = 16;

TabloidKey encode_tabloid(const Tabloid& t);
Tabloid decode_tabloid(TabloidKey key, int n);

// Finite Z-linear combination of tabloids of one shape.
class TabloidVector {
 public:
  TabloidVector() = default;
  explicit TabloidVector(Partition shape) : shape_(std::move(shape)) {}

  const Partition& shape() const { return shape_; }
  const std::map<TabloidKey, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(TabloidKey k, const Int& c);
  void add(const Tabloid& t, const Int& c) { add(encode_tabloid(t), c); }
  Int coefficient(const Tabloid& t) const;
  Int coefficient(TabloidKey k) const;
  // Terms in tabloid order.
  std::vector<std::pair<Tabloid, Int>> sorted_terms() const;

  TabloidVector& operator+=(const TabloidVector& o);
  TabloidVector& operator-=(const TabloidVector& o);
  TabloidVector& operator*=(const Int& c);
  friend TabloidVector operator+(TabloidVector a, const TabloidVector& b) { return a += b; }
  friend TabloidVector operator-(TabloidVector a, const TabloidVector& b) { return a -= b; }
  friend TabloidVector operator*(const Int& c, TabloidVector a) { return a *= c; }

  bool operator==(const TabloidVector&) const = default;

 private:
  void require_same_shape(const TabloidVector& o) const;
  Partition shape_;
  std::map<TabloidKey, Int> terms_;
};

// The symmetric bilinear form in which tabloids are orthonormal.
Int pair(const TabloidVector& a, const TabloidVector& b);

// Right action: entry v is replaced by sigma[v-1].
TabloidVector act(const TabloidVector& v, const std::vector<int>& sigma);

// Polytabloid support with its signs, sorted by key. Distinct column
// permutations give distinct tabloids, so the support has |C_t| entries.
struct SignedExpansion {
  std::vector<TabloidKey> keys;
  std::vector<std::int8_t> signs;
  // Sign of key in the expansion, 0 when absent.
  int sign_of(TabloidKey k) const;
};

SignedExpansion expand_signed(const Tableau& t);
std::int64_t pair_signed(const SignedExpansion& a, const SignedExpansion& b);

// e_t = sum over the column stabilizer of sign(sigma) {t sigma}.
TabloidVector expand_polytabloid(const Tableau& t);

// sum over the row stabilizer R_t of e_{t sigma}.
TabloidVector row_symmetrize(const Tableau& t);

}  // namespace specht
