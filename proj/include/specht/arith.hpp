#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace specht {

using Int = mpz_class;

// p-adic valuation of a nonzero integer.
int valuation(const Int& x, unsigned long p);
int valuation(long long x, unsigned long p);

// v_p(num/den) for nonzero num, den.
int rational_valuation(long long num, long long den, unsigned long p);

Int factorial(long n);
// Zero outside 0 <= k <= n.
Int binomial(long n, long k);

bool is_prime(unsigned long n);
std::vector<unsigned long> primes_up_to(unsigned long n);

bool is_perfect_square(const Int& x);

// prod_{p <= m} p^{floor(log_p m)}, i.e. lcm(1..m).
Int quasi_factorial(long m);

std::string to_decimal(const Int& x);
Int from_decimal(const std::string& s);

}  // namespace specht
