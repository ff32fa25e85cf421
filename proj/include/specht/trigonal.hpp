#pragma once

#include <functional>
#include <string>

#include "specht/divisor_chain.hpp"
#include "specht/int_matrix.hpp"

namespace specht {

struct TrigonalCheck {
  bool ok = false;
  std::string violation;  // empty when ok
  DivisorChain chain;     // |diagonal| when ok
};

// Checks that the pairing table t_ij = (x_i, y_j) is upper triangular with a
// nonzero diagonal, that each diagonal entry divides the rest of its row and
// the next diagonal entry, and that the diagonal multiplies to +-det. Then the
// diagonal is the elementary divisor chain.
TrigonalCheck verify_trigonal_pairing(const IntMatrix& table, const Int& det);
TrigonalCheck verify_trigonal_pairing(std::size_t size, const std::function<Int(std::size_t, std::size_t)>& pairing, const Int& det);

}  // namespace specht
