#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specht/divisor_chain.hpp"
#include "specht/int_matrix.hpp"
#include "specht/partition.hpp"

namespace specht {

struct JantzenProfile {
  unsigned long p = 0;
  // layer -> dimension; only nonzero layers are stored
  std::map<int, std::uint64_t> layer_dims;

  std::uint64_t total() const;
  // sum of layer * dimension = v_p(det)
  std::uint64_t weighted() const;
  int top_layer() const;
  std::string to_string() const;
  bool operator==(const JantzenProfile&) const = default;
};

// layer_dims[i] = #{d : v_p(d) = i}.
JantzenProfile layers_from_divisors(const DivisorChain& chain, unsigned long p);

// Dimensions of S(i) = ker(G mod p^i) + pS over F_p for i = 0, 1, ... until 0,
// straight from the definition of the filtration.
std::vector<std::uint64_t> filtration_dims(const IntMatrix& gram, unsigned long p);
JantzenProfile layers_from_filtration(const IntMatrix& gram, unsigned long p);

// Places a simple module of known total multiplicity and known sum of
// layer * multiplicity. Returns the layer map when forced, nullopt when the
// data leave it open. Throws InconsistencyError on impossible data.
std::optional<std::map<int, std::uint64_t>> distribute_multiplicity(std::uint64_t total, std::uint64_t weighted,
                                                                    int forced_zero_below);

struct DualityReport {
  unsigned long p = 0;
  int mirror_height = 0;        // v_p(n!/dim)
  bool positional = false;      // d_i(lambda) d_{r+1-i}(lambda') = n!/dim
  bool determinant = false;     // det(lambda) det(lambda') = (n!/dim)^dim
  bool mirror = false;          // layer i of lambda = layer N-i of lambda'
  bool ok() const { return positional && determinant && mirror; }
};

DualityReport duality_check(const Partition& lambda, unsigned long p);

}  // namespace specht
