#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specht/arith.hpp"
#include "specht/jantzen.hpp"
#include "specht/oracle.hpp"
#include "specht/partition.hpp"

namespace specht {

// Transpose duality over Z: d_i(lambda) d_{r+1-i}(lambda') = n!/dim and the
// determinant product.
struct TransposeDuality {
  Partition lambda;
  DivisorChain chain, dual_chain;
  Int index;  // n! / dim
  bool positional = false;
  bool determinant = false;
  std::optional<std::size_t> first_bad_position;
  bool ok() const { return positional && determinant; }
};
TransposeDuality duality_report(const Partition& lambda);

struct JamesBoundReport {
  Partition lambda;
  Int factor;  // prod (lambda'_i - lambda'_{i+1})!
  Int first_divisor;
  Int upper;   // prod (lambda'_i - lambda'_{i+1})!^i
  bool factor_divides = false;
  bool divides_upper = false;
  bool ok() const { return factor_divides && divides_upper; }
};
JamesBoundReport james_bound(const Partition& lambda);

struct SymmetricReport {
  Partition lambda;
  std::size_t rank = 0;
  int diagonal = 0;      // number of main-diagonal cells
  Int H;                 // product of main-diagonal hook lengths
  Int m_jump;            // d_{r/2+1} / d_{r/2}
  Int alpha;             // product of hook lengths strictly above the diagonal
  Int gamma;             // first elementary divisor
  Int h_sq;              // largest h with h^2 | H
  bool signed_H_square = false;  // (-1)^{(n-s)/2} H is a square in Z
  bool H_over_m_square = false;
  bool H_over_m_integer = false;
  // gamma | alpha h, or gamma | alpha sqrt(H) when signed_H_square
  bool gamma_divides_alpha_h = false;
  // (n!/dim) / m_jump = d_{r/2}^2
  bool middle_square = false;
};
SymmetricReport symmetric_report(const Partition& lambda);

struct LocalUnimodular {
  unsigned long p = 0;
  // multiplicity of D^{(n-j,j)} in the Gram cokernel, j in [0, m-1]; only
  // p-regular labels (dim D > 0) are listed
  std::vector<std::pair<int, long long>> multiplicities;
  bool even = true;
};
struct UnimodularReport {
  int n = 0, m = 0;
  std::vector<LocalUnimodular> local;
  bool exists() const;
  std::vector<unsigned long> failing_primes() const;
};
// With p: that prime only. Without: every prime p <= n.
UnimodularReport unimodular_test(int n, int m, std::optional<unsigned long> p = std::nullopt);

// Positive x <= bound with 2y^2 - x^2 = 1 and 3z^2 - x^2 = 2.
std::vector<std::array<std::uint64_t, 3>> pell_search(std::uint64_t bound, unsigned threads = 0);

}  // namespace specht
