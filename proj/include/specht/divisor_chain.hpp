#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "specht/arith.hpp"

namespace specht {

// Nonzero invariant factors d_1 | d_2 | ... plus a count of zero factors.
struct DivisorChain {
  std::vector<Int> divisors;
  std::size_t zero_count = 0;

  std::size_t rank() const { return divisors.size(); }
  Int product() const;
  // "1^4 3^4 15^4 45^4"
  std::string compact() const;
  bool operator==(const DivisorChain&) const = default;
};

// Validates positivity and the divisibility chain.
DivisorChain make_chain(std::vector<Int> divisors, std::size_t zero_count = 0);
// Inverse of DivisorChain::compact().
DivisorChain parse_compact_chain(const std::string& text);

struct GroupTerm {
  Int modulus;
  std::uint64_t multiplicity = 0;
  bool operator==(const GroupTerm&) const = default;
};

// Direct sum of cyclic groups; normalized terms have modulus >= 2, distinct
// moduli, ascending order.
struct GroupDecomposition {
  std::vector<GroupTerm> terms;

  Int order() const;
  std::string to_string() const;
  bool operator==(const GroupDecomposition&) const = default;
};

GroupDecomposition normalize_group(std::vector<GroupTerm> terms);
GroupDecomposition assemble_group(const DivisorChain& chain);

// Invariant-factor chain of an arbitrary finite abelian group, padded with 1s to rank.
DivisorChain chain_from_group(const GroupDecomposition& g, std::size_t rank);
// Same isomorphism class.
bool isomorphic(const GroupDecomposition& a, const GroupDecomposition& b);

// Prime factorization by trial division; throws if a cofactor is left over.
std::map<unsigned long, int> factor(const Int& x);

// prime -> p-part of each divisor (same length as the chain), for every
// prime dividing some divisor.
std::map<unsigned long, std::vector<Int>> decompose_by_primes(const DivisorChain& chain);

// Pads each prime's list with 1s to rank, sorts ascending, multiplies positionally.
DivisorChain merge_p_parts(const std::map<unsigned long, std::vector<Int>>& per_prime, std::size_t rank);

std::vector<int> p_valuations(const DivisorChain& chain, unsigned long p);
GroupDecomposition p_part_group(const DivisorChain& chain, unsigned long p);
GroupDecomposition p_part_group(const GroupDecomposition& g, unsigned long p);

}  // namespace specht
