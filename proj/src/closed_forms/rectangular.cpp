#include "specht/rectangular.hpp"

#include "specht/errors.hpp"

namespace specht {

RectangularScale rectangular_scale(const Partition& mu) {
  if (!mu.is_rectangle()) throw DomainError(mu.to_string() + " is not a rectangle");
  if (mu.n() < 2) throw DomainError("rectangle too small to remove a node");
  std::vector<int> parts = mu.parts();
  parts.back() -= 1;
  return {Partition(parts), mu.length()};
}

}  // namespace specht
