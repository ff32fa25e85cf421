#pragma once

#include <vector>

#include "specht/divisor_chain.hpp"
#include "specht/formal_sum.hpp"
#include "specht/tabloid_vector.hpp"

namespace specht {

// (n-l, 1^l)
Partition hook_partition(int n, int l);

// (Z/l!)^{C(n-2,l)} + (Z/(n l!))^{C(n-2,l-1)}
GroupDecomposition hook_group(int n, int l);
// l!^{C(n-1,l)} n^{C(n-2,l-1)}
Int hook_order(int n, int l);

// Jantzen subquotients of the hook over F_p as simple-module classes.
FormalSum hook_layers(int n, int l, unsigned long p);

// Polytabloid of the hook whose first column is the given tuple (top to
// bottom); the rest of the first row is increasing.
TabloidVector hook_polytabloid(int n, const std::vector<int>& first_column);

struct HookBases {
  std::vector<TabloidVector> x, y;
  std::vector<std::vector<int>> y_columns;  // first columns of the y vectors
};

// x = (<n,b>) then (sum_{s} <s,d,n>); y = standard basis, first the
// elements without n in the first column, in the matching order.
HookBases hook_trigonal_bases(int n, int l);

}  // namespace specht
