#include "specht/cli/record.hpp"

#include "specht/errors.hpp"

namespace specht::cli {

ResultRecord make_record(const Partition& lambda, const DivisorChain& chain, const std::string& provenance) {
  ResultRecord r;
  r.partition = lambda.to_string();
  r.rank = chain.rank();
  for (const Int& d : chain.divisors) r.elementary_divisors.push_back(to_decimal(d));
  for (const auto& [p, parts] : decompose_by_primes(chain)) r.p_parts[p] = p_valuations(chain, p);
  r.det = to_decimal(chain.product());
  r.provenance = provenance;
  return r;
}

DivisorChain record_chain(const ResultRecord& r) {
  std::vector<Int> d;
  for (const auto& s : r.elementary_divisors) d.push_back(from_decimal(s));
  return make_chain(std::move(d));
}

void validate_record(const ResultRecord& r) {
  DivisorChain c;
  try {
    c = record_chain(r);
  } catch (const std::exception& e) {
    throw InconsistencyError(std::string("record divisors: ") + e.what());
  }
  if (c.rank() != r.rank) throw InconsistencyError("record rank does not match its divisors");
  if (to_decimal(c.product()) != r.det) throw InconsistencyError("record det is not the product of its divisors");
}

nlohmann::ordered_json to_json(const ResultRecord& r) {
  nlohmann::ordered_json j;
  j["partition"] = r.partition;
  j["rank"] = r.rank;
  j["elementary_divisors"] = r.elementary_divisors;
  nlohmann::ordered_json parts = nlohmann::ordered_json::object();
  for (const auto& [p, v] : r.p_parts) parts[std::to_string(p)] = v;
  j["p_parts"] = parts;
  j["det"] = r.det;
  j["provenance"] = r.provenance;
  j["tool_version"] = r.tool_version;
  return j;
}

ResultRecord record_from_json(const nlohmann::json& j) {
  try {
    ResultRecord r;
    r.partition = j.at("partition").get<std::string>();
    r.rank = j.at("rank").get<std::size_t>();
    r.elementary_divisors = j.at("elementary_divisors").get<std::vector<std::string>>();
    for (const auto& [k, v] : j.at("p_parts").items()) r.p_parts[std::stoul(k)] = v.get<std::vector<int>>();
    r.det = j.at("det").get<std::string>();
    r.provenance = j.at("provenance").get<std::string>();
    r.tool_version = j.at("tool_version").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed result record: ") + e.what());
  }
}

std::string serialize(const ResultRecord& r) { return to_json(r).dump(2) + "\n"; }

}  // namespace specht::cli
