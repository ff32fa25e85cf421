#include "specht/oracle.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "specht/specht_basis.hpp"

namespace specht {

const SmithResult& gram_smith(const Partition& lambda) {
  static std::mutex mu;
  static std::map<Partition, std::unique_ptr<SmithResult>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(lambda); it != cache.end()) return *it->second;
  }
  auto res = std::make_unique<SmithResult>(smith_normal_form(gram_matrix(lambda)));
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.try_emplace(lambda, std::move(res));
  return *it->second;
}

std::size_t dim_simple(const Partition& lambda, unsigned long p) {
  std::size_t c = 0;
  for (const auto& d : gram_chain(lambda).divisors)
    if (!mpz_divisible_ui_p(d.get_mpz_t(), p)) ++c;
  return c;
}

}  // namespace specht
