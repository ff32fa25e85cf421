#pragma once

#include <vector>

#include "specht/int_matrix.hpp"

namespace specht {

// Row-style Hermite normal form: echelon rows with positive pivots and the
// entries above each pivot reduced into [0, pivot). Zero rows are dropped.
// With modulus > 0 the lattice is taken to be rows + modulus * Z^c and the
// arithmetic stays bounded by the modulus.
IntMatrix hermite_normal_form(const IntMatrix& generators, const Int& modulus = 0);

// A sublattice of Z^d held in canonical (Hermite) form.
class Lattice {
 public:
  Lattice() = default;
  Lattice(const IntMatrix& generators, std::size_t dim, const Int& modulus = 0);

  std::size_t dim() const { return dim_; }
  const IntMatrix& basis() const { return basis_; }
  std::size_t rank() const { return basis_.rows(); }
  bool full_rank() const { return rank() == dim_; }
  // [Z^d : L] for full-rank L.
  Int index() const;
  // gcd of all basis entries: the first elementary divisor of L in Z^d.
  Int first_divisor() const;
  bool contains(const std::vector<Int>& v) const;

  bool operator==(const Lattice& o) const { return dim_ == o.dim_ && basis_ == o.basis_; }

 private:
  IntMatrix basis_;
  std::size_t dim_ = 0;
};

// {v in Z^c : M v = 0 mod N}.
Lattice kernel_mod(const IntMatrix& m, const Int& modulus);

}  // namespace specht
