#include "specht/analyses.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "specht/errors.hpp"
#include "specht/hooks.hpp"
#include "specht/two_row.hpp"

namespace specht {

TransposeDuality duality_report(const Partition& lambda) {
  TransposeDuality r;
  r.lambda = lambda;
  r.chain = gram_chain(lambda);
  r.dual_chain = gram_chain(lambda.transpose());
  r.index = index_quotient(lambda);
  const std::size_t rank = r.chain.rank();
  r.positional = rank == r.dual_chain.rank();
  for (std::size_t i = 0; r.positional && i < rank; ++i)
    if (r.chain.divisors[i] * r.dual_chain.divisors[rank - 1 - i] != r.index) {
      r.positional = false;
      r.first_bad_position = i + 1;
    }
  Int power;
  mpz_pow_ui(power.get_mpz_t(), r.index.get_mpz_t(), rank);
  r.determinant = r.chain.product() * r.dual_chain.product() == power;
  return r;
}

JamesBoundReport james_bound(const Partition& lambda) {
  JamesBoundReport r;
  r.lambda = lambda;
  r.factor = james_factor(lambda);
  r.first_divisor = gram_chain(lambda).divisors.front();
  r.upper = 1;
  for (int i = 1; i <= lambda.part(1); ++i) {
    Int f = factorial(lambda.column(i) - lambda.column(i + 1));
    Int fi;
    mpz_pow_ui(fi.get_mpz_t(), f.get_mpz_t(), i);
    r.upper *= fi;
  }
  r.factor_divides = mpz_divisible_p(r.first_divisor.get_mpz_t(), r.factor.get_mpz_t()) != 0;
  r.divides_upper = mpz_divisible_p(r.upper.get_mpz_t(), r.first_divisor.get_mpz_t()) != 0;
  return r;
}

namespace {

Int largest_square_divisor_root(const Int& x) {
  Int h = 1;
  for (const auto& [p, e] : factor(x)) {
    Int pp;
    mpz_ui_pow_ui(pp.get_mpz_t(), p, e / 2);
    h *= pp;
  }
  return h;
}

bool rational_square(const Int& num, const Int& den) {
  Int g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return is_perfect_square(num / g) && is_perfect_square(den / g);
}

bool divides(const Int& a, const Int& b) { return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0; }

}  // namespace

SymmetricReport symmetric_report(const Partition& lambda) {
  if (!lambda.is_symmetric()) throw DomainError(lambda.to_string() + " is not symmetric");
  if (lambda.n() < 2) throw DomainError("the middle jump needs a symmetric partition other than (1)");
  SymmetricReport r;
  r.lambda = lambda;
  const auto& chain = gram_chain(lambda);
  r.rank = chain.rank();
  if (r.rank % 2) throw InconsistencyError("odd rank for a symmetric partition");
  const auto hooks = hook_data(lambda).cell_hooks;
  r.H = 1;
  r.alpha = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda.part(i + 1); ++j) {
      if (i == j) {
        r.H *= hooks[i][j];
        ++r.diagonal;
      } else if (j > i) {
        r.alpha *= hooks[i][j];
      }
    }
  const Int& lower = chain.divisors[r.rank / 2 - 1];
  r.m_jump = chain.divisors[r.rank / 2] / lower;
  r.gamma = chain.divisors.front();
  r.h_sq = largest_square_divisor_root(r.H);
  r.H_over_m_square = rational_square(r.H, r.m_jump);
  r.H_over_m_integer = divides(r.m_jump, r.H);
  const bool negative = ((lambda.n() - r.diagonal) / 2) % 2 == 1;
  r.signed_H_square = !negative && is_perfect_square(r.H);
  if (r.signed_H_square) {
    r.gamma_divides_alpha_h = divides(r.gamma, r.alpha * Int(sqrt(r.H)));
  } else {
    r.gamma_divides_alpha_h = divides(r.gamma, r.alpha * r.h_sq);
  }
  r.middle_square = index_quotient(lambda) == r.m_jump * lower * lower;
  return r;
}

bool UnimodularReport::exists() const {
  return std::all_of(local.begin(), local.end(), [](const LocalUnimodular& l) { return l.even; });
}

std::vector<unsigned long> UnimodularReport::failing_primes() const {
  std::vector<unsigned long> out;
  for (const auto& l : local)
    if (!l.even) out.push_back(l.p);
  return out;
}

UnimodularReport unimodular_test(int n, int m, std::optional<unsigned long> p) {
  if (m < 0 || 2 * m > n) throw DomainError("unimodular test needs 0 <= m <= n/2");
  UnimodularReport r;
  r.n = n;
  r.m = m;
  std::vector<unsigned long> primes;
  if (p) {
    if (!is_prime(*p)) throw DomainError("p must be prime");
    primes.push_back(*p);
  } else {
    primes = primes_up_to(static_cast<unsigned long>(n));
  }
  for (unsigned long q : primes) {
    const TwoRowContext ctx = two_row_context(n, m, q);
    LocalUnimodular l;
    l.p = q;
    for (int j = 0; j < m; ++j) {
      if (ctx.dims_simple[j] == 0) continue;
      l.multiplicities.emplace_back(j, ctx.mu[j]);
      if (ctx.mu[j] % 2) l.even = false;
    }
    r.local.push_back(std::move(l));
  }
  return r;
}

namespace {

std::uint64_t isqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

bool square_root_of(std::uint64_t x, std::uint64_t& root) {
  root = isqrt(x);
  return root * root == x;
}

}  // namespace

std::vector<std::array<std::uint64_t, 3>> pell_search(std::uint64_t bound, unsigned threads) {
  if (bound < 1) throw DomainError("pell bound must be positive");
  if (bound > 3'000'000'000ULL) throw DomainError("pell bound too large for 64-bit squares");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::vector<std::array<std::uint64_t, 3>>> found(threads);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      for (std::uint64_t x = 1 + w; x <= bound; x += threads) {
        const std::uint64_t x2 = x * x;
        if ((x2 + 1) % 2 || (x2 + 2) % 3) continue;
        std::uint64_t y, z;
        if (square_root_of((x2 + 1) / 2, y) && square_root_of((x2 + 2) / 3, z)) found[w].push_back({x, y, z});
      }
    });
  for (auto& t : pool) t.join();
  std::vector<std::array<std::uint64_t, 3>> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace specht
