#pragma once

#include <vector>

#include "specht/arith.hpp"
#include "specht/int_matrix.hpp"
#include "specht/lattice.hpp"
#include "specht/tableau.hpp"

namespace specht {

// (2^{h-k}, 1^{n-2h+2k}).
Partition two_column_shape(int n, int h, int k);

// Sum of the 1-based positions of zeta's entries inside column.
int zeta_position_sum(const std::vector<int>& column, const std::vector<int>& zeta);

// Moves zeta from the second column to the bottom of the first one.
Tableau move_to_first_column(const Tableau& a, const std::vector<int>& zeta);

// sum over k-subtuples zeta of the second column of (-1)^{position sum} e_{a^zeta},
// in standard coordinates of S^{(2^{h-k}, 1^{n-2h+2k})}, not reduced.
std::vector<Int> lowering_map(const Tableau& a, int k);

// Matrix of lowering_map on the standard basis of S^{(2^h,1^{n-2h})}.
IntMatrix lowering_matrix(int n, int h, int k);

struct Conm5Report {
  int n = 0, h = 0;
  bool holds = false;
  Int modulus;                 // n! / dim S^{(2^h,1^{n-2h})}
  std::vector<Int> gammas;     // first divisor of each running intersection before step k
  std::vector<Int> indices;    // index of the running intersection after step k (k = 0..h)
  Lattice intersection;
  Lattice gram_kernel;
};

// Intersects the kernels of the scaled lowering maps modulo n-2h+1+k and
// compares with the kernel of the Gram matrix modulo n!/dim.
Conm5Report conm5_check(int n, int h);

}  // namespace specht
