#pragma once

#include "specht/divisor_chain.hpp"
#include "specht/int_matrix.hpp"

namespace specht {

struct SmithResult {
  DivisorChain chain;
  // Signed determinant for square input, tracked through the unimodular
  // operations; zero when singular or non-square.
  Int det;
};

// Nonsingular square input: exact determinant by CRT, then a local Smith
// form for each prime dividing it. Anything else goes through
// smith_normal_form_euclid.
SmithResult smith_normal_form(const IntMatrix& m);

// Minimal-absolute-value pivoting over Z. Exact but prone to coefficient
// growth beyond ~100 rows.
SmithResult smith_normal_form_euclid(const IntMatrix& m);

// Exact determinant from residues modulo word-size primes, enough of them to
// exceed twice the Hadamard bound.
Int determinant(const IntMatrix& m);

// Valuations v_p(d_i) of the elementary divisors of a nonsingular square
// matrix, ascending.
std::vector<int> local_smith_valuations(const IntMatrix& m, unsigned long p);

// Rank over F_p, p prime below 2^32.
std::size_t rank_mod_p(const IntMatrix& m, unsigned long p);

}  // namespace specht
