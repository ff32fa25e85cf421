#pragma once

#include <string>
#include <vector>

#include "specht/formal_sum.hpp"

namespace specht {

enum class SchaperFamily { N3_2_1, N4_2_2, N4_3_1, N4_2_1_1 };

// "n-3,2,1", "n-4,2^2", "n-4,3,1", "n-4,2,1^2" (a few spellings accepted).
SchaperFamily parse_schaper_family(const std::string& name);
std::string schaper_family_name(SchaperFamily f);
// Smallest n covered by the printed formula.
int schaper_family_min_n(SchaperFamily f);
Partition schaper_family_head(SchaperFamily f, int n);

// [S^{lambda,*}/S^lambda] over Z_(p) in Specht classes.
FormalSum schaper_family(SchaperFamily f, int n, unsigned long p);

}  // namespace specht
