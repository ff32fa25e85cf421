#include "specht/jantzen.hpp"

#include <sstream>

#include "specht/errors.hpp"
#include "specht/hooks.hpp"
#include "specht/lattice.hpp"
#include "specht/oracle.hpp"
#include "specht/smith.hpp"

namespace specht {

std::uint64_t JantzenProfile::total() const {
  std::uint64_t t = 0;
  for (auto [i, d] : layer_dims) t += d;
  return t;
}

std::uint64_t JantzenProfile::weighted() const {
  std::uint64_t t = 0;
  for (auto [i, d] : layer_dims) t += static_cast<std::uint64_t>(i) * d;
  return t;
}

int JantzenProfile::top_layer() const { return layer_dims.empty() ? -1 : layer_dims.rbegin()->first; }

std::string JantzenProfile::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (auto [i, d] : layer_dims) {
    if (!first) os << ' ';
    first = false;
    os << i << ':' << d;
  }
  return os.str();
}

JantzenProfile layers_from_divisors(const DivisorChain& chain, unsigned long p) {
  if (chain.zero_count) throw DomainError("Jantzen layers need a nonsingular form");
  JantzenProfile prof;
  prof.p = p;
  for (int v : p_valuations(chain, p)) ++prof.layer_dims[v];
  return prof;
}

std::vector<std::uint64_t> filtration_dims(const IntMatrix& gram, unsigned long p) {
  std::vector<std::uint64_t> dims;
  Int pk = 1;
  for (;;) {
    Lattice l = kernel_mod(gram, pk);
    std::uint64_t d = rank_mod_p(l.basis(), p);
    dims.push_back(d);
    if (d == 0) break;
    pk *= p;
    if (dims.size() > 4096) throw InconsistencyError("filtration did not terminate");
  }
  return dims;
}

JantzenProfile layers_from_filtration(const IntMatrix& gram, unsigned long p) {
  auto dims = filtration_dims(gram, p);
  JantzenProfile prof;
  prof.p = p;
  for (std::size_t i = 0; i + 1 < dims.size(); ++i)
    if (dims[i] > dims[i + 1]) prof.layer_dims[static_cast<int>(i)] = dims[i] - dims[i + 1];
  return prof;
}

std::optional<std::map<int, std::uint64_t>> distribute_multiplicity(std::uint64_t total, std::uint64_t weighted,
                                                                    int forced_zero_below) {
  if (forced_zero_below < 0) throw DomainError("forced_zero_below must be non-negative");
  const std::uint64_t s = static_cast<std::uint64_t>(forced_zero_below);
  if (total == 0) {
    if (weighted != 0) throw InconsistencyError("weighted multiplicity without any composition factor");
    return std::map<int, std::uint64_t>{};
  }
  if (weighted < s * total) throw InconsistencyError("weighted multiplicity below the forced lower layer");
  if (total == 1) return std::map<int, std::uint64_t>{{static_cast<int>(weighted), 1}};
  if (weighted == s * total) return std::map<int, std::uint64_t>{{forced_zero_below, total}};
  return std::nullopt;
}

DualityReport duality_check(const Partition& lambda, unsigned long p) {
  DualityReport r;
  r.p = p;
  const Partition conj = lambda.transpose();
  const DivisorChain& a = gram_chain(lambda);
  const DivisorChain& b = gram_chain(conj);
  const Int q = index_quotient(lambda);
  const std::size_t d = a.rank();
  r.mirror_height = valuation(q, p);

  r.positional = b.rank() == d;
  for (std::size_t i = 0; r.positional && i < d; ++i)
    if (a.divisors[i] * b.divisors[d - 1 - i] != q) r.positional = false;

  Int qd;
  mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), d);
  r.determinant = gram_smith(lambda).det * gram_smith(conj).det == qd;

  JantzenProfile pa = layers_from_divisors(a, p), pb = layers_from_divisors(b, p);
  r.mirror = pa.top_layer() <= r.mirror_height && pb.top_layer() <= r.mirror_height;
  for (int i = 0; r.mirror && i <= r.mirror_height; ++i) {
    auto ia = pa.layer_dims.find(i);
    auto ib = pb.layer_dims.find(r.mirror_height - i);
    std::uint64_t da = ia == pa.layer_dims.end() ? 0 : ia->second;
    std::uint64_t db = ib == pb.layer_dims.end() ? 0 : ib->second;
    if (da != db) r.mirror = false;
  }
  return r;
}

}  // namespace specht
