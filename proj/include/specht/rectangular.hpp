#pragma once

#include "specht/arith.hpp"
#include "specht/partition.hpp"

namespace specht {

struct RectangularScale {
  Partition smaller;  // the rectangle without its last node
  int factor = 0;     // number of rows
};

// For a rectangle mu with h rows, the Gram chain of mu is h times that of
// mu minus its last node.
RectangularScale rectangular_scale(const Partition& mu);

}  // namespace specht
