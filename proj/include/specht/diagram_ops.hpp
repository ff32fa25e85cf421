#pragma once

#include "specht/partition.hpp"

namespace specht {

struct RegularityInfo {
  bool is_regular = false;
  Partition regularized;
};

// lambda is p-regular iff lambda'_i - lambda'_{i+1} < p for all i. The
// regularization slides every node as high as possible along its p-ladder.
RegularityInfo regularity(const Partition& lambda, int p);

// Row 1 gains mu_{s} - j + 1 nodes and row s = mu'_j drops to j - 1.
// Requires 1 <= j <= mu_2.
Partition carter_payne_shift(const Partition& mu, int j);

// Removes the rim hook of cell (i, t) and appends its length to row 1.
Partition strip_skew_hook(const Partition& lambda, int i, int t);

// Hook length of the cell (i, t), 1-based.
int cell_hook_length(const Partition& lambda, int i, int t);

}  // namespace specht
