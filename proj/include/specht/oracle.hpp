#pragma once

#include "specht/partition.hpp"
#include "specht/smith.hpp"

namespace specht {

// Smith form of the unscaled Gram matrix, memoized per shape (thread safe).
const SmithResult& gram_smith(const Partition& lambda);

inline const DivisorChain& gram_chain(const Partition& lambda) { return gram_smith(lambda).chain; }

// Number of elementary divisors prime to p, i.e. dim D^lambda over F_p.
std::size_t dim_simple(const Partition& lambda, unsigned long p);

}  // namespace specht
