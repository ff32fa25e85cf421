#include "specht/arith.hpp"

#include "specht/errors.hpp"

namespace specht {

int valuation(const Int& x, unsigned long p) {
  if (x == 0) throw DomainError("valuation of zero");
  if (p < 2) throw DomainError("valuation needs a prime");
  Int q = x;
  int v = 0;
  while (mpz_divisible_ui_p(q.get_mpz_t(), p)) {
    mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), p);
    ++v;
  }
  return v;
}

int valuation(long long x, unsigned long p) {
  if (x == 0) throw DomainError("valuation of zero");
  if (p < 2) throw DomainError("valuation needs a prime");
  unsigned long long a = x < 0 ? -static_cast<unsigned long long>(x) : x;
  int v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

int rational_valuation(long long num, long long den, unsigned long p) {
  return valuation(num, p) - valuation(den, p);
}

Int factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Int binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<unsigned long> primes_up_to(unsigned long n) {
  std::vector<unsigned long> out;
  for (unsigned long q = 2; q <= n; ++q)
    if (is_prime(q)) out.push_back(q);
  return out;
}

bool is_perfect_square(const Int& x) {
  if (x < 0) return false;
  return mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

Int quasi_factorial(long m) {
  Int r = 1;
  for (unsigned long p : primes_up_to(m < 0 ? 0 : static_cast<unsigned long>(m))) {
    Int pk = p;
    while (pk * p <= m) pk *= p;
    r *= pk;
  }
  return r;
}

std::string to_decimal(const Int& x) { return x.get_str(10); }

Int from_decimal(const std::string& s) {
  Int r;
  if (s.empty() || r.set_str(s, 10) != 0) throw ParseError("not a decimal integer: '" + s + "'");
  return r;
}

}  // namespace specht
