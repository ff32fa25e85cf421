#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "specht/int_matrix.hpp"
#include "specht/tabloid_vector.hpp"

namespace specht {

// Standard polytabloid basis of S^lambda with its tabloid supports.
class SpechtBasis {
 public:
  explicit SpechtBasis(const Partition& lambda);

  const Partition& shape() const { return shape_; }
  std::size_t dim() const { return tableaux_.size(); }
  const std::vector<Tableau>& tableaux() const { return tableaux_; }
  const SignedExpansion& expansion(std::size_t i) const { return expansions_[i]; }
  TabloidVector polytabloid(std::size_t i) const;

  // Gram matrix of the standard basis; scaled divides out james_factor.
  IntMatrix gram(bool scaled = false) const;

  // Coordinates in the standard basis. Throws MembershipError when v is
  // not in S^lambda (checked by re-expanding unless verify is false).
  std::vector<Int> straighten(const TabloidVector& v, bool verify = true) const;
  // Coordinates of the polytabloid of an arbitrary tableau of this shape.
  std::vector<Int> straighten(const Tableau& t) const;

  // Basis index of a standard tableau, or dim() if absent.
  std::size_t index_of(const Tableau& t) const;

 private:
  std::vector<Int> solve(const std::vector<Int>& rhs) const;
  std::vector<Int> standard_coefficients(const SignedExpansion& e) const;

  Partition shape_;
  std::vector<Tableau> tableaux_;
  std::vector<SignedExpansion> expansions_;
  std::vector<TabloidKey> standard_keys_;
  // substitution order (dominance-compatible) and lower-triangular incidence
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::pair<std::size_t, int>>> below_;
};

// Shared, lazily built bases (one per shape, thread safe).
const SpechtBasis& specht_basis(const Partition& lambda);

IntMatrix gram_matrix(const Partition& lambda, bool scaled = false);

// Table of pair(x_i, y_j), each entry divided exactly by divisor.
IntMatrix pairing_table(const std::vector<TabloidVector>& x, const std::vector<TabloidVector>& y, const Int& divisor = 1);

}  // namespace specht
