#include "specht/divisor_chain.hpp"

#include <algorithm>
#include <sstream>

#include "specht/errors.hpp"

namespace specht {

Int DivisorChain::product() const {
  if (zero_count) return 0;
  Int p = 1;
  for (const auto& d : divisors) p *= d;
  return p;
}

std::string DivisorChain::compact() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const std::string& v, std::size_t m) {
    if (!first) os << ' ';
    first = false;
    os << v;
    if (m > 1) os << '^' << m;
  };
  for (std::size_t i = 0; i < divisors.size();) {
    std::size_t j = i;
    while (j < divisors.size() && divisors[j] == divisors[i]) ++j;
    emit(to_decimal(divisors[i]), j - i);
    i = j;
  }
  if (zero_count) emit("0", zero_count);
  return os.str();
}

DivisorChain make_chain(std::vector<Int> divisors, std::size_t zero_count) {
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (divisors[i] <= 0) throw InconsistencyError("chain entries must be positive");
    if (i && divisors[i] % divisors[i - 1] != 0) throw InconsistencyError("chain entries must divide their successors");
  }
  return DivisorChain{std::move(divisors), zero_count};
}

DivisorChain parse_compact_chain(const std::string& text) {
  std::istringstream is(text);
  std::string tok;
  std::vector<Int> d;
  std::size_t zeros = 0;
  while (is >> tok) {
    auto caret = tok.find('^');
    Int v = from_decimal(tok.substr(0, caret));
    std::size_t m = caret == std::string::npos ? 1 : std::stoul(tok.substr(caret + 1));
    if (v == 0) zeros += m;
    else d.insert(d.end(), m, v);
  }
  return make_chain(std::move(d), zeros);
}

Int GroupDecomposition::order() const {
  Int o = 1;
  for (const auto& t : terms) {
    Int pw;
    mpz_pow_ui(pw.get_mpz_t(), t.modulus.get_mpz_t(), t.multiplicity);
    o *= pw;
  }
  return o;
}

std::string GroupDecomposition::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) os << " + ";
    os << "(Z/" << to_decimal(terms[i].modulus) << ")";
    if (terms[i].multiplicity != 1) os << '^' << terms[i].multiplicity;
  }
  return os.str();
}

GroupDecomposition normalize_group(std::vector<GroupTerm> terms) {
  std::map<Int, std::uint64_t> acc;
  for (auto& t : terms) {
    if (t.modulus < 1) throw DomainError("group moduli must be positive");
    if (t.modulus == 1 || t.multiplicity == 0) continue;
    acc[t.modulus] += t.multiplicity;
  }
  GroupDecomposition g;
  for (auto& [m, k] : acc) g.terms.push_back({m, k});
  return g;
}

GroupDecomposition assemble_group(const DivisorChain& chain) {
  if (chain.zero_count) throw DomainError("group of a chain with zero factors is infinite");
  std::vector<GroupTerm> terms;
  for (const auto& d : chain.divisors) terms.push_back({d, 1});
  return normalize_group(std::move(terms));
}

std::map<unsigned long, int> factor(const Int& x) {
  if (x == 0) throw DomainError("cannot factor zero");
  Int r = abs(x);
  std::map<unsigned long, int> out;
  for (unsigned long p = 2; r > 1; ++p) {
    if (Int(p) * p > r) {
      if (!r.fits_ulong_p()) throw DomainError("prime factor too large: " + to_decimal(r));
      out[r.get_ui()] += 1;
      break;
    }
    if (p > 10000000UL) throw DomainError("factorization gave up on " + to_decimal(x));
    while (mpz_divisible_ui_p(r.get_mpz_t(), p)) {
      mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), p);
      out[p] += 1;
    }
  }
  return out;
}

std::map<unsigned long, std::vector<Int>> decompose_by_primes(const DivisorChain& chain) {
  std::map<unsigned long, std::vector<Int>> out;
  std::vector<std::map<unsigned long, int>> factored;
  for (const auto& d : chain.divisors) {
    factored.push_back(factor(d));
    for (auto& [p, e] : factored.back()) out[p];
  }
  for (auto& [p, list] : out) {
    for (const auto& f : factored) {
      auto it = f.find(p);
      Int pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), p, it == f.end() ? 0 : it->second);
      list.push_back(pw);
    }
  }
  return out;
}

DivisorChain merge_p_parts(const std::map<unsigned long, std::vector<Int>>& per_prime, std::size_t rank) {
  std::vector<Int> result(rank, Int(1));
  for (const auto& [p, list] : per_prime) {
    if (list.size() > rank) throw InconsistencyError("more p-parts than the rank for p = " + std::to_string(p));
    std::vector<Int> padded = list;
    for (const auto& q : padded) {
      Int r = q;
      if (r < 1) throw InconsistencyError("p-parts must be positive");
      while (mpz_divisible_ui_p(r.get_mpz_t(), p)) mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), p);
      if (r != 1) throw InconsistencyError(to_decimal(q) + " is not a power of " + std::to_string(p));
    }
    padded.resize(rank, Int(1));
    std::sort(padded.begin(), padded.end());
    for (std::size_t i = 0; i < rank; ++i) result[i] *= padded[i];
  }
  return make_chain(std::move(result));
}

DivisorChain chain_from_group(const GroupDecomposition& g, std::size_t rank) {
  std::map<unsigned long, std::vector<Int>> per_prime;
  for (const auto& t : g.terms)
    for (auto [p, e] : factor(t.modulus)) {
      Int pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), p, e);
      per_prime[p].insert(per_prime[p].end(), t.multiplicity, pw);
    }
  return merge_p_parts(per_prime, rank);
}

bool isomorphic(const GroupDecomposition& a, const GroupDecomposition& b) {
  std::size_t ra = 0, rb = 0;
  for (const auto& t : a.terms) ra += t.multiplicity;
  for (const auto& t : b.terms) rb += t.multiplicity;
  std::size_t r = std::max(ra, rb);
  return chain_from_group(a, r) == chain_from_group(b, r);
}

std::vector<int> p_valuations(const DivisorChain& chain, unsigned long p) {
  std::vector<int> v;
  for (const auto& d : chain.divisors) v.push_back(valuation(d, p));
  return v;
}

GroupDecomposition p_part_group(const DivisorChain& chain, unsigned long p) {
  std::vector<GroupTerm> terms;
  for (int e : p_valuations(chain, p)) {
    Int pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), p, e);
    terms.push_back({pw, 1});
  }
  return normalize_group(std::move(terms));
}

GroupDecomposition p_part_group(const GroupDecomposition& g, unsigned long p) {
  std::vector<GroupTerm> terms;
  for (const auto& t : g.terms) {
    Int pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), p, valuation(t.modulus, p));
    terms.push_back({pw, t.multiplicity});
  }
  return normalize_group(std::move(terms));
}

}  // namespace specht
