#pragma once

#include <cstdint>
#include <vector>

#include "specht/divisor_chain.hpp"
#include "specht/partition.hpp"

namespace specht {

struct LargePrimeResult {
  bool simple = true;          // no first-row hook divisible by p
  int t = 0;                   // column with p | h_t (when not simple)
  int s = 0;                   // lambda'_t
  Partition shifted;           // lambda[t]
  int layer = 0;               // v_p(h_t)
  std::vector<Partition> strips;  // lambda<i> for i in [2, s]
  std::int64_t dim_shift = 0;  // sum (-1)^{s-i} dim S^{lambda<i>}
  GroupDecomposition p_part;
};

// Requires lambda != (n) and n - lambda_1 < p.
LargePrimeResult large_prime_analyze(const Partition& lambda, unsigned long p);

}  // namespace specht
