#pragma once

#include <string>
#include <vector>

#include "specht/divisor_chain.hpp"
#include "specht/tabloid_vector.hpp"

namespace specht {

// (2^h, 1^{n-2h})
Partition two_column_partition(int n, int h);

// Polytabloid with the given second column (any order) and the remaining
// entries increasing down the first column.
TabloidVector two_column_polytabloid(int n, const std::vector<int>& second);
// Same, symmetrized over the row stabilizer of that tableau.
TabloidVector two_column_row_symmetrized(int n, const std::vector<int>& second);

// Scaled pairing (-,=)_0 of two such polytabloids with increasing second
// columns xi, eta of length h.
Int two_column_entry(int n, int h, const std::vector<int>& xi, const std::vector<int>& eta);

// Elementary divisors of (2^2, 1^{n-4}) as a group, n >= 6.
GroupDecomposition two_column_22_group(int n);
// Order of that group from the transpose duality count.
Int two_column_22_order(int n);

struct PairedBases {
  std::vector<TabloidVector> x, y;
  std::vector<std::string> x_labels, y_labels;
};

// Trigonalizing bases of (2^2, 1^{n-4}), n >= 6.
PairedBases two_column_22_bases(int n);

}  // namespace specht
