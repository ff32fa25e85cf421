#include "specht/two_row.hpp"

#include "specht/errors.hpp"

namespace specht {

namespace {

std::vector<long> digits(long x, unsigned long p) {
  std::vector<long> d;
  while (x > 0) {
    d.push_back(x % static_cast<long>(p));
    x /= static_cast<long>(p);
  }
  return d;
}

Int two_row_dim(int n, int l) { return binomial(n, l) * (n - 2 * l + 1) / (n - l + 1); }

}  // namespace

int contains_base_p(long s, long t, unsigned long p) {
  if (p < 2) throw DomainError("base must be a prime");
  if (s < 0 || t < 0) return 0;
  if (t == 0) return 1;
  auto sd = digits(s + 1, p), td = digits(t, p);
  if (sd.size() <= td.size()) return 0;
  for (std::size_t i = 0; i < td.size(); ++i)
    if (td[i] != 0 && td[i] != sd[i]) return 0;
  return 1;
}

long f2_sum(long k, long m) {
  long s = 0;
  for (long t = m; t >= 0; t -= 2) s += contains_base_p(k, t, 2);
  return s;
}

std::optional<long> f2_sum_digits(long k, long m) {
  if (k < 0 || m < 0) return std::nullopt;
  auto a = digits(k + 1, 2), b = digits(m, 2);
  const long K = static_cast<long>(a.size()) - 1, M = static_cast<long>(b.size()) - 1;
  if (K <= M) return std::nullopt;
  if ((k * m) % 2 != 0) return 0;
  auto bit = [](const std::vector<long>& v, long i) { return i >= 0 && i < static_cast<long>(v.size()) ? v[i] : 0L; };
  long t = 0;
  for (long s = 1; s <= M; ++s)
    if (bit(a, s) < bit(b, s)) t = s;
  long e = 0;
  for (long u = 1; u <= t; ++u) e += bit(a, u);
  long inner = 1;
  for (long s = t + 1; s <= M; ++s) {
    long f = 0;
    for (long u = t + 1; u <= s - 1; ++u) f += bit(a, u);
    inner += bit(a, s) * bit(b, s) * (1L << f);
  }
  return (1L << e) * inner;
}

TwoRowContext two_row_context(int n, int m, unsigned long p) {
  if (n < 1 || m < 0 || 2 * m > n) throw DomainError("two-row data need n >= 1 and 0 <= m <= n/2");
  if (!is_prime(p)) throw DomainError("p must be prime");
  TwoRowContext c;
  c.n = n;
  c.m = m;
  c.p = p;
  const int h = n / 2;
  c.f_table.assign(h + 1, std::vector<long long>(h + 1, 0));
  for (int i = 0; i <= h; ++i)
    for (int j = 0; j <= h; ++j) c.f_table[i][j] = contains_base_p(n - 2 * j, i - j, p);
  c.b_table.assign(h + 1, std::vector<long long>(h + 1, 0));
  for (int i = 0; i <= h; ++i) {
    c.b_table[i][i] = 1;
    for (int j = i - 1; j >= 0; --j) {
      long long s = 0;
      for (int k = j; k < i; ++k) s += c.f_table[i][k] * c.b_table[k][j];
      c.b_table[i][j] = -s;
    }
  }
  for (int i = 0; i < m; ++i) c.schaper.push_back(rational_valuation(n + 1 - m - i, m - i, p));
  for (int j = 0; j < m; ++j) {
    long long s = 0;
    for (int i = j; i < m; ++i) s += c.schaper[i] * contains_base_p(n - 2 * j, i - j, p);
    c.mu.push_back(s);
  }
  for (int j = 0; j <= h; ++j) {
    Int d = 0;
    for (int l = 0; l <= j; ++l) d += Int(static_cast<long>(c.b_table[j][l])) * two_row_dim(n, l);
    c.dims_simple.push_back(d);
  }
  return c;
}

GroupDecomposition two_row_p_part(int n, int m, unsigned long p) {
  TwoRowContext c = two_row_context(n, m, p);
  std::vector<GroupTerm> terms;
  for (int j = 0; j < m; ++j) {
    if (c.mu[j] < 0) throw InconsistencyError("negative two-row layer");
    if (c.dims_simple[j] < 0) throw InconsistencyError("negative simple dimension");
    Int pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), p, static_cast<unsigned long>(c.mu[j]));
    terms.push_back({pw, c.dims_simple[j].get_ui()});
  }
  return normalize_group(std::move(terms));
}

GroupDecomposition two_row_large_prime_group(int n, int m) {
  if (n < 1 || m < 0 || 2 * m > n) throw DomainError("two-row data need n >= 1 and 0 <= m <= n/2");
  std::vector<GroupTerm> terms;
  for (int j = 0; j < m; ++j) terms.push_back({Int(n + 1 - m - j), two_row_dim(n, j).get_ui()});
  return normalize_group(std::move(terms));
}

FormalSum two_row_schaper(int n, int m, unsigned long p) {
  TwoRowContext c = two_row_context(n, m, p);
  FormalSum s;
  for (int i = 0; i < m; ++i) s.add(c.schaper[i], Partition({n - i, i}));
  return s;
}

}  // namespace specht
