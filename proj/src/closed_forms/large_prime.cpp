#include "specht/large_prime.hpp"

#include "specht/diagram_ops.hpp"
#include "specht/errors.hpp"
#include "specht/hooks.hpp"

namespace specht {

LargePrimeResult large_prime_analyze(const Partition& lambda, unsigned long p) {
  const int n = lambda.n();
  if (lambda.length() < 2) throw DomainError("large-prime analysis excludes the trivial partition");
  if (!is_prime(p)) throw DomainError("p must be prime");
  if (static_cast<long>(p) <= n - lambda.part(1)) throw DomainError("needs p > n - lambda_1");
  LargePrimeResult r;
  const auto hooks = hook_data(lambda).first_row;
  for (std::size_t j = 0; j < hooks.size(); ++j)
    if (hooks[j] % static_cast<long>(p) == 0) {
      if (!r.simple) throw InconsistencyError("two first-row hooks divisible by p");
      r.simple = false;
      r.t = static_cast<int>(j) + 1;
    }
  if (r.simple) return r;
  r.s = lambda.column(r.t);
  r.shifted = carter_payne_shift(lambda, r.t);
  r.layer = valuation(static_cast<long long>(hooks[r.t - 1]), p);
  for (int i = 2; i <= r.s; ++i) {
    Partition strip = strip_skew_hook(lambda, i, r.t);
    r.strips.push_back(strip);
    std::int64_t d = static_cast<std::int64_t>(dim_specht(strip));
    r.dim_shift += (r.s - i) % 2 ? -d : d;
  }
  if (r.dim_shift < 0) throw InconsistencyError("negative alternating dimension");
  Int pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), p, r.layer);
  r.p_part = normalize_group({{pw, static_cast<std::uint64_t>(r.dim_shift)}});
  return r;
}

}  // namespace specht
