#include "specht/smith.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>

#include "specht/errors.hpp"

namespace specht {

namespace {

// Brings a diagonal into divisibility-chain form with gcd/lcm swaps.
std::vector<Int> chain_from_diagonal(std::vector<Int> d) {
  for (auto& x : d) x = abs(x);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[j] % d[i] == 0) continue;
      Int g = gcd(d[i], d[j]);
      Int l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  return d;
}

}  // namespace

SmithResult smith_normal_form_euclid(const IntMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  IntMatrix a = m;
  int sign = 1;
  std::vector<Int> diag;
  Int q;
  const std::size_t K = std::min(R, C);
  for (std::size_t k = 0; k < K; ++k) {
    bool found = true;
    for (;;) {
      std::size_t pi = R, pj = C;
      for (std::size_t i = k; i < R; ++i)
        for (std::size_t j = k; j < C; ++j) {
          const Int& x = a(i, j);
          if (x == 0) continue;
          if (pi == R || mpz_cmpabs(x.get_mpz_t(), a(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
            if (mpz_cmpabs_ui(x.get_mpz_t(), 1) == 0) goto picked;
          }
        }
    picked:
      if (pi == R) {
        found = false;
        break;
      }
      if (pi != k) {
        for (std::size_t j = k; j < C; ++j) swap(a(k, j), a(pi, j));
        sign = -sign;
      }
      if (pj != k) {
        for (std::size_t i = k; i < R; ++i) swap(a(i, k), a(i, pj));
        sign = -sign;
      }
      bool clean = true;
      const Int& piv = a(k, k);
      for (std::size_t i = k + 1; i < R; ++i) {
        if (a(i, k) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(i, k).get_mpz_t(), piv.get_mpz_t());
        if (q != 0)
          for (std::size_t j = k; j < C; ++j)
            if (a(k, j) != 0) mpz_submul(a(i, j).get_mpz_t(), q.get_mpz_t(), a(k, j).get_mpz_t());
        if (a(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < C; ++j) {
        if (a(k, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(k, j).get_mpz_t(), piv.get_mpz_t());
        if (q != 0)
          for (std::size_t i = k; i < R; ++i)
            if (a(i, k) != 0) mpz_submul(a(i, j).get_mpz_t(), q.get_mpz_t(), a(i, k).get_mpz_t());
        if (a(k, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!found) break;
    diag.push_back(a(k, k));
  }

  SmithResult res;
  res.det = 0;
  if (m.is_square() && diag.size() == K) {
    res.det = sign;
    for (const auto& d : diag) res.det *= d;
  }
  std::size_t zeros = K - diag.size();
  res.chain = make_chain(chain_from_diagonal(std::move(diag)), zeros);
  return res;
}

std::size_t rank_mod_p(const IntMatrix& m, unsigned long p) {
  if (p < 2 || p > 0xffffffffUL) throw DomainError("rank_mod_p needs a prime below 2^32");
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::uint64_t> a(R * C);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) a[i * C + j] = mpz_fdiv_ui(m(i, j).get_mpz_t(), p);
  auto inv = [p](std::uint64_t x) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < C && rank < R; ++c) {
    std::size_t piv = R;
    for (std::size_t i = rank; i < R; ++i)
      if (a[i * C + c]) {
        piv = i;
        break;
      }
    if (piv == R) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < C; ++j) std::swap(a[piv * C + j], a[rank * C + j]);
    std::uint64_t iv = inv(a[rank * C + c]);
    for (std::size_t i = rank + 1; i < R; ++i) {
      std::uint64_t f = a[i * C + c] * iv % p;
      if (!f) continue;
      for (std::size_t j = c; j < C; ++j) a[i * C + j] = (a[i * C + j] + (p - f) * a[rank * C + j]) % p;
    }
    ++rank;
  }
  return rank;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t x, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  x %= m;
  while (e) {
    if (e & 1) r = mulmod(r, x, m);
    x = mulmod(x, x, m);
    e >>= 1;
  }
  return r;
}

// Inverse of a unit modulo m (m < 2^63).
std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  __int128 t = 0, nt = 1, r = m, nr = a % m;
  while (nr != 0) {
    __int128 q = r / nr;
    __int128 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw InconsistencyError("inverse of a non-unit");
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

// det mod a prime p < 2^31.
std::uint64_t det_mod_prime(const IntMatrix& m, std::uint64_t p) {
  const std::size_t n = m.rows();
  std::vector<std::uint64_t> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = mpz_fdiv_ui(m(i, j).get_mpz_t(), p);
  std::uint64_t det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i)
      if (a[i * n + k]) {
        piv = i;
        break;
      }
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a[piv * n + j], a[k * n + j]);
      det = (p - det) % p;
    }
    det = det * a[k * n + k] % p;
    std::uint64_t iv = powmod(a[k * n + k], p - 2, p);
    for (std::size_t i = k + 1; i < n; ++i) {
      std::uint64_t f = a[i * n + k] * iv % p;
      if (!f) continue;
      f = p - f;
      std::uint64_t* ri = &a[i * n];
      const std::uint64_t* rk = &a[k * n];
      for (std::size_t j = k; j < n; ++j) ri[j] = (ri[j] + f * rk[j]) % p;
    }
  }
  return det;
}

// Valuations of the local Smith form modulo p^k; entries equal to k mean
// "at least k".
std::vector<int> local_valuations_word(const IntMatrix& m, std::uint64_t p, int k) {
  std::uint64_t mod = 1;
  for (int i = 0; i < k; ++i) mod *= p;
  const std::size_t n = m.rows();
  std::vector<std::uint64_t> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = mpz_fdiv_ui(m(i, j).get_mpz_t(), mod);
  auto val = [&](std::uint64_t x) {
    if (x == 0) return k;
    int v = 0;
    while (x % p == 0) {
      x /= p;
      ++v;
    }
    return v;
  };
  std::vector<int> out;
  std::vector<std::size_t> rows(n), cols(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = cols[i] = i;
  for (std::size_t s = 0; s < n; ++s) {
    int best = k;
    std::size_t bi = n, bj = n;
    for (std::size_t ii = s; ii < n && best > 0; ++ii)
      for (std::size_t jj = s; jj < n; ++jj) {
        std::uint64_t x = a[rows[ii] * n + cols[jj]];
        if (!x) continue;
        int v = val(x);
        if (v < best) {
          best = v;
          bi = ii;
          bj = jj;
          if (v == 0) break;
        }
      }
    if (bi == n) {
      out.insert(out.end(), n - s, k);
      break;
    }
    std::swap(rows[s], rows[bi]);
    std::swap(cols[s], cols[bj]);
    out.push_back(best);
    const std::size_t pr = rows[s], pc = cols[s];
    std::uint64_t pw = 1;
    for (int i = 0; i < best; ++i) pw *= p;
    std::uint64_t unit_inv = invmod(a[pr * n + pc] / pw, mod);
    for (std::size_t ii = s + 1; ii < n; ++ii) {
      const std::size_t r = rows[ii];
      std::uint64_t x = a[r * n + pc];
      if (!x) continue;
      std::uint64_t f = mulmod(x / pw, unit_inv, mod);
      f = (mod - f) % mod;
      for (std::size_t jj = s; jj < n; ++jj) {
        const std::size_t c = cols[jj];
        a[r * n + c] = (a[r * n + c] + mulmod(f, a[pr * n + c], mod)) % mod;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Trial division by primes below 10^5; a leftover cofactor is accepted only
// when it is itself a prime below 2^32.
std::map<unsigned long, int> factor_small(const Int& x) {
  Int r = abs(x);
  std::map<unsigned long, int> out;
  for (unsigned long p = 2; p < 100000 && r > 1; ++p) {
    if (Int(p) * p > r) break;
    while (mpz_divisible_ui_p(r.get_mpz_t(), p)) {
      mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), p);
      out[p] += 1;
    }
  }
  if (r > 1) {
    if (!r.fits_ulong_p() || r.get_ui() > 0xffffffffUL || !is_prime(r.get_ui()))
      throw DomainError("determinant has a large prime factor");
    out[r.get_ui()] += 1;
  }
  return out;
}

std::vector<unsigned long> crt_primes(std::size_t count) {
  static std::mutex mu;
  static std::vector<unsigned long> cache;
  std::lock_guard lock(mu);
  for (unsigned long c = cache.empty() ? (1UL << 31) - 1 : cache.back() - 2; cache.size() < count; c -= 2)
    if (is_prime(c)) cache.push_back(c);
  return {cache.begin(), cache.begin() + count};
}

}  // namespace

Int determinant(const IntMatrix& m) {
  if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // bits of 2 * Hadamard bound
  Int h2 = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < n; ++j) s += m(i, j) * m(i, j);
    if (s == 0) return 0;
    h2 *= s;
  }
  std::size_t bits = mpz_sizeinbase(h2.get_mpz_t(), 2) / 2 + 3;
  std::size_t count = bits / 30 + 1;
  auto primes = crt_primes(count);
  Int x = 0, mod = 1;
  for (unsigned long p : primes) {
    std::uint64_t r = det_mod_prime(m, p);
    std::uint64_t xm = mpz_fdiv_ui(x.get_mpz_t(), p);
    std::uint64_t mm = mpz_fdiv_ui(mod.get_mpz_t(), p);
    std::uint64_t t = (r + p - xm) % p * powmod(mm, p - 2, p) % p;
    x += mod * t;
    mod *= p;
  }
  if (2 * x > mod) x -= mod;
  return x;
}

std::vector<int> local_smith_valuations(const IntMatrix& m, unsigned long p) {
  if (!m.is_square()) throw DomainError("local Smith form needs a square matrix");
  if (!is_prime(p)) throw DomainError("local Smith form needs a prime");
  int k = 0;
  for (unsigned __int128 pw = p; pw < (static_cast<unsigned __int128>(1) << 62); pw *= p) ++k;
  auto v = local_valuations_word(m, p, k);
  if (!v.empty() && v.back() >= k) throw DomainError("valuation exceeds word-size modulus; use smith_normal_form_euclid");
  return v;
}

SmithResult smith_normal_form(const IntMatrix& m) {
  if (!m.is_square() || m.rows() < 24) return smith_normal_form_euclid(m);
  Int det = determinant(m);
  if (det == 0) return smith_normal_form_euclid(m);
  std::map<unsigned long, int> primes;
  try {
    primes = factor_small(det);
  } catch (const DomainError&) {
    return smith_normal_form_euclid(m);
  }
  std::map<unsigned long, std::vector<Int>> per_prime;
  for (auto [p, e] : primes) {
    std::vector<int> v;
    try {
      v = local_smith_valuations(m, p);
    } catch (const DomainError&) {
      return smith_normal_form_euclid(m);
    }
    int total = 0;
    for (int x : v) {
      total += x;
      Int pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), p, x);
      per_prime[p].push_back(pw);
    }
    if (total != e) throw InconsistencyError("local Smith valuations disagree with the determinant");
  }
  SmithResult res;
  res.chain = merge_p_parts(per_prime, m.rows());
  res.det = det;
  return res;
}

}  // namespace specht
