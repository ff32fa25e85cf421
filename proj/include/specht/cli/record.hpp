#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "specht/divisor_chain.hpp"
#include "specht/partition.hpp"

namespace specht::cli {

inline constexpr const char* kToolVersion = "0.1.0";

struct ResultRecord {
  std::string partition;
  std::size_t rank = 0;
  std::vector<std::string> elementary_divisors;
  // prime -> v_p of each divisor, for every prime dividing det
  std::map<unsigned long, std::vector<int>> p_parts;
  std::string det;
  std::string provenance;  // "brute" or "closed_form:<name>"
  std::string tool_version = kToolVersion;
  bool operator==(const ResultRecord&) const = default;
};

ResultRecord make_record(const Partition& lambda, const DivisorChain& chain, const std::string& provenance = "brute");
DivisorChain record_chain(const ResultRecord& r);
// Throws InconsistencyError if the divisors are not a chain or det differs
// from their product.
void validate_record(const ResultRecord& r);

nlohmann::ordered_json to_json(const ResultRecord& r);
ResultRecord record_from_json(const nlohmann::json& j);
// Pretty-printed, newline-terminated; stable byte for byte.
std::string serialize(const ResultRecord& r);

}  // namespace specht::cli
