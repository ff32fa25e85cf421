#pragma once

#include <cstdint>
#include <vector>

#include "specht/arith.hpp"
#include "specht/partition.hpp"

namespace specht {

struct HookData {
  // cell_hooks[i][j] for the cell in row i+1, column j+1.
  std::vector<std::vector<int>> cell_hooks;
  // h_j = lambda_1 - j + lambda'_j for j in [1, lambda_2]; empty when lambda_2 = 0.
  std::vector<int> first_row;
};

HookData hook_data(const Partition& lambda);

// Number of standard tableaux, counted by removing corners recursively.
std::uint64_t dim_specht(const Partition& lambda);

Int hook_product(const Partition& lambda);

// prod_i (lambda'_i - lambda'_{i+1})!, the common factor of all Gram entries.
Int james_factor(const Partition& lambda);

// n! / dim S^lambda.
Int index_quotient(const Partition& lambda);

}  // namespace specht
