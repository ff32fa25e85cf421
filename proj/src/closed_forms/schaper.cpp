#include "specht/schaper.hpp"

#include <algorithm>

#include "specht/errors.hpp"

namespace specht {

SchaperFamily parse_schaper_family(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (c != ' ' && c != '(' && c != ')') s += c;
  if (s == "n-3,2,1") return SchaperFamily::N3_2_1;
  if (s == "n-4,2^2" || s == "n-4,2,2") return SchaperFamily::N4_2_2;
  if (s == "n-4,3,1") return SchaperFamily::N4_3_1;
  if (s == "n-4,2,1^2" || s == "n-4,2,1,1") return SchaperFamily::N4_2_1_1;
  throw ParseError("unknown Schaper family '" + raw + "'");
}

std::string schaper_family_name(SchaperFamily f) {
  switch (f) {
    case SchaperFamily::N3_2_1: return "n-3,2,1";
    case SchaperFamily::N4_2_2: return "n-4,2^2";
    case SchaperFamily::N4_3_1: return "n-4,3,1";
    case SchaperFamily::N4_2_1_1: return "n-4,2,1^2";
  }
  return "";
}

int schaper_family_min_n(SchaperFamily f) { return f == SchaperFamily::N3_2_1 ? 6 : 8; }

Partition schaper_family_head(SchaperFamily f, int n) {
  switch (f) {
    case SchaperFamily::N3_2_1: return Partition({n - 3, 2, 1});
    case SchaperFamily::N4_2_2: return Partition({n - 4, 2, 2});
    case SchaperFamily::N4_3_1: return Partition({n - 4, 3, 1});
    case SchaperFamily::N4_2_1_1: return Partition({n - 4, 2, 1, 1});
  }
  throw DomainError("unknown family");
}

FormalSum schaper_family(SchaperFamily f, int n, unsigned long p) {
  if (n < schaper_family_min_n(f)) throw DomainError("n below the range of the " + schaper_family_name(f) + " formula");
  if (!is_prime(p)) throw DomainError("p must be prime");
  auto v = [p](long long a, long long b) { return static_cast<std::int64_t>(rational_valuation(a, b, p)); };
  FormalSum s;
  switch (f) {
    case SchaperFamily::N3_2_1:
      s.add(v(3, 1), Partition({n - 3, 3}));
      s.add(v(n - 1, 1), Partition({n - 2, 2}));
      s.add(-v(n - 1, 3), Partition({n}));
      s.add(v(n - 3, 1), Partition({n - 2, 1, 1}));
      break;
    case SchaperFamily::N4_2_2:
      s.add(v(3, 2), Partition({n - 4, 4}));
      s.add(v(n - 2, 2), Partition({n - 2, 2}));
      s.add(-v(n - 2, 3), Partition({n - 1, 1}));
      s.add(v(2, 1), Partition({n - 4, 3, 1}));
      s.add(v(n - 3, 1), Partition({n - 3, 2, 1}));
      s.add(-v(n - 3, 2), Partition({n - 2, 1, 1}));
      break;
    case SchaperFamily::N4_3_1:
      s.add(-v(n - 2, 4), Partition({n}));
      s.add(v(n - 2, 1), Partition({n - 3, 3}));
      s.add(v(4, 1), Partition({n - 4, 4}));
      s.add(v(n - 4, 2), Partition({n - 2, 1, 1}));
      s.add(v(n - 5, 1), Partition({n - 3, 2, 1}));
      break;
    case SchaperFamily::N4_2_1_1:
      s.add(v(2, 1), Partition({n - 4, 2, 2}));
      s.add(v(4, 1), Partition({n - 4, 3, 1}));
      s.add(v(n - 1, 1), Partition({n - 3, 2, 1}));
      s.add(-v(2, 1), Partition({n - 4, 4}));
      s.add(-v(n - 1, 2), Partition({n - 2, 2}));
      s.add(v(n - 1, 4), Partition({n}));
      s.add(v(n - 4, 1), Partition({n - 3, 1, 1, 1}));
      break;
  }
  return s;
}

}  // namespace specht
