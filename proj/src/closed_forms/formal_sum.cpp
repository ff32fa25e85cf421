#include "specht/formal_sum.hpp"

#include <algorithm>
#include <sstream>

#include "specht/errors.hpp"
#include "specht/oracle.hpp"

namespace specht {

void FormalSum::add(std::int64_t coefficient, const Partition& label, std::optional<int> layer) {
  if (coefficient == 0) return;
  for (auto it = terms.begin(); it != terms.end(); ++it)
    if (it->label == label && it->layer == layer) {
      it->coefficient += coefficient;
      if (it->coefficient == 0) terms.erase(it);
      return;
    }
  terms.push_back({coefficient, label, layer});
}

std::int64_t FormalSum::coefficient(const Partition& label, std::optional<int> layer) const {
  for (const auto& t : terms)
    if (t.label == label && t.layer == layer) return t.coefficient;
  return 0;
}

std::string FormalSum::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    std::int64_t c = t.coefficient;
    if (i) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    if (c < 0) c = -c;
    if (c != 1) os << c;
    os << '[' << t.label.to_string() << ']';
    if (t.layer) os << '_' << *t.layer;
  }
  return os.str();
}

std::int64_t evaluate(const FormalSum& s, const std::function<std::uint64_t(const Partition&)>& dim) {
  std::int64_t total = 0;
  for (const auto& t : s.terms) total += t.coefficient * static_cast<std::int64_t>(dim(t.label));
  return total;
}

JantzenProfile predicted_profile(const FormalSum& s, unsigned long p) {
  std::map<int, std::int64_t> acc;
  for (const auto& t : s.terms) {
    if (!t.layer) throw DomainError("profile of a sum without layers");
    acc[*t.layer] += t.coefficient * static_cast<std::int64_t>(dim_simple(t.label, p));
  }
  JantzenProfile prof;
  prof.p = p;
  for (auto [i, d] : acc) {
    if (d < 0) throw InconsistencyError("negative layer dimension");
    if (d > 0) prof.layer_dims[i] = static_cast<std::uint64_t>(d);
  }
  return prof;
}

}  // namespace specht
