#pragma once

#include <optional>
#include <vector>

#include "specht/arith.hpp"
#include "specht/divisor_chain.hpp"
#include "specht/formal_sum.hpp"

namespace specht {

// 1 if s+1 contains t to base p, else 0. Negative t gives 0.
int contains_base_p(long s, long t, unsigned long p);

// sum_{i >= 0} f_2(k, m - 2i).
long f2_sum(long k, long m);
// Digit formula for the same sum, defined only when the base-2 length of
// k+1 exceeds that of m.
std::optional<long> f2_sum_digits(long k, long m);

struct TwoRowContext {
  int n = 0, m = 0;
  unsigned long p = 0;
  // f_table[i][j] = f_p(n-2j, i-j), 0 <= i, j <= n/2; b_table is its inverse
  std::vector<std::vector<long long>> f_table, b_table;
  // v_p((n+1-m-i)/(m-i)) for i in [0, m-1]
  std::vector<int> schaper;
  // multiplicity-weighted layer of D^{(n-j,j)} for j in [0, m-1]
  std::vector<long long> mu;
  // dim D^{(n-j,j)} for j in [0, n/2]
  std::vector<Int> dims_simple;
};

TwoRowContext two_row_context(int n, int m, unsigned long p);

// p-part of the Gram cokernel of S^{(n-m,m)}: (Z/p^{mu_j})^{dim D^{(n-j,j)}}.
GroupDecomposition two_row_p_part(int n, int m, unsigned long p);

// (Z/(n+1-m-j))^{dim S^{(n-j,j)}} over j in [0, m-1], valid at primes p > m.
GroupDecomposition two_row_large_prime_group(int n, int m);

// Schaper sum in Specht classes.
FormalSum two_row_schaper(int n, int m, unsigned long p);

}  // namespace specht
