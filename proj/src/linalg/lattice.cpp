#include "specht/lattice.hpp"

#include <algorithm>

#include "specht/errors.hpp"

namespace specht {

namespace {

using Row = std::vector<Int>;

void reduce_tail(Row& r, std::size_t from, const Int& modulus) {
  for (std::size_t j = from; j < r.size(); ++j) mpz_fdiv_r(r[j].get_mpz_t(), r[j].get_mpz_t(), modulus.get_mpz_t());
}

bool is_zero(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; });
}

}  // namespace

IntMatrix hermite_normal_form(const IntMatrix& generators, const Int& modulus) {
  const std::size_t C = generators.cols();
  const bool modular = modulus > 0;
  std::vector<Row> rows;
  for (std::size_t i = 0; i < generators.rows(); ++i) {
    Row r = generators.row(i);
    if (modular) reduce_tail(r, 0, modulus);
    if (!is_zero(r)) rows.push_back(std::move(r));
  }
  std::size_t pr = 0;
  std::vector<std::size_t> pivot_cols;
  Int q;
  for (std::size_t col = 0; col < C; ++col) {
    if (modular) {
      Row e(C);
      e[col] = modulus;
      rows.push_back(std::move(e));
    }
    bool have_pivot = false;
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = pr; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() || mpz_cmpabs(rows[i][col].get_mpz_t(), rows[best][col].get_mpz_t()) < 0) best = i;
      }
      if (best == rows.size()) break;
      have_pivot = true;
      std::swap(rows[pr], rows[best]);
      bool clean = true;
      for (std::size_t i = pr + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[pr][col].get_mpz_t());
        for (std::size_t j = col; j < C; ++j) mpz_submul(rows[i][j].get_mpz_t(), q.get_mpz_t(), rows[pr][j].get_mpz_t());
        if (modular) reduce_tail(rows[i], col + 1, modulus);
        if (rows[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    // drop rows that became zero
    std::vector<Row> kept(rows.begin(), rows.begin() + pr + (have_pivot ? 1 : 0));
    for (std::size_t i = kept.size(); i < rows.size(); ++i)
      if (!is_zero(rows[i])) kept.push_back(std::move(rows[i]));
    rows = std::move(kept);
    if (!have_pivot) continue;
    if (rows[pr][col] < 0)
      for (auto& x : rows[pr]) x = -x;
    if (modular) reduce_tail(rows[pr], col + 1, modulus);
    pivot_cols.push_back(col);
    ++pr;
  }
  for (std::size_t r = 0; r < pr; ++r) {
    std::size_t pc = pivot_cols[r];
    for (std::size_t i = 0; i < r; ++i) {
      mpz_fdiv_q(q.get_mpz_t(), rows[i][pc].get_mpz_t(), rows[r][pc].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = pc; j < C; ++j) mpz_submul(rows[i][j].get_mpz_t(), q.get_mpz_t(), rows[r][j].get_mpz_t());
    }
  }
  IntMatrix h(pr, C);
  for (std::size_t i = 0; i < pr; ++i)
    for (std::size_t j = 0; j < C; ++j) h(i, j) = rows[i][j];
  return h;
}

Lattice::Lattice(const IntMatrix& generators, std::size_t dim, const Int& modulus) : dim_(dim) {
  if (generators.rows() > 0 && generators.cols() != dim) throw DomainError("generator length differs from lattice dimension");
  IntMatrix g = generators.rows() == 0 ? IntMatrix(0, dim) : generators;
  basis_ = hermite_normal_form(g, modulus);
}

Int Lattice::index() const {
  if (!full_rank()) throw DomainError("index of a lattice that is not full rank");
  Int r = 1;
  for (std::size_t i = 0; i < basis_.rows(); ++i) r *= basis_(i, i);
  return r;
}

Int Lattice::first_divisor() const {
  Int g = 0;
  for (std::size_t i = 0; i < basis_.rows(); ++i)
    for (std::size_t j = 0; j < basis_.cols(); ++j) g = gcd(g, basis_(i, j));
  return g;
}

bool Lattice::contains(const std::vector<Int>& v) const {
  if (v.size() != dim_) return false;
  Row r = v;
  std::size_t row = 0;
  for (std::size_t col = 0; col < dim_; ++col) {
    if (row < basis_.rows() && basis_(row, col) != 0) {
      if (r[col] % basis_(row, col) != 0) return false;
      Int q = r[col] / basis_(row, col);
      for (std::size_t j = col; j < dim_; ++j) r[j] -= q * basis_(row, j);
      ++row;
    } else if (r[col] != 0) {
      return false;
    }
  }
  return true;
}

Lattice kernel_mod(const IntMatrix& m, const Int& modulus) {
  if (modulus < 1) throw DomainError("kernel modulus must be positive");
  const std::size_t R = m.rows(), C = m.cols();
  const Int half = modulus / 2;
  auto sym = [&](Int& x) {
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
    if (x > half) x -= modulus;
  };
  IntMatrix a = m;
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) sym(a(i, j));
  IntMatrix qm = IntMatrix::identity(C);
  std::vector<Int> diag(C, Int(0));
  Int q;
  for (std::size_t k = 0; k < std::min(R, C); ++k) {
    bool found = true;
    for (;;) {
      std::size_t pi = R, pj = C;
      for (std::size_t i = k; i < R; ++i)
        for (std::size_t j = k; j < C; ++j)
          if (a(i, j) != 0 && (pi == R || mpz_cmpabs(a(i, j).get_mpz_t(), a(pi, pj).get_mpz_t()) < 0)) {
            pi = i;
            pj = j;
          }
      if (pi == R) {
        found = false;
        break;
      }
      if (pi != k)
        for (std::size_t j = k; j < C; ++j) swap(a(k, j), a(pi, j));
      if (pj != k) {
        for (std::size_t i = k; i < R; ++i) swap(a(i, k), a(i, pj));
        for (std::size_t i = 0; i < C; ++i) swap(qm(i, k), qm(i, pj));
      }
      bool clean = true;
      for (std::size_t i = k + 1; i < R; ++i) {
        if (a(i, k) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(i, k).get_mpz_t(), a(k, k).get_mpz_t());
        for (std::size_t j = k; j < C; ++j) {
          mpz_submul(a(i, j).get_mpz_t(), q.get_mpz_t(), a(k, j).get_mpz_t());
          sym(a(i, j));
        }
        if (a(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < C; ++j) {
        if (a(k, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(k, j).get_mpz_t(), a(k, k).get_mpz_t());
        for (std::size_t i = k; i < R; ++i) {
          mpz_submul(a(i, j).get_mpz_t(), q.get_mpz_t(), a(i, k).get_mpz_t());
          sym(a(i, j));
        }
        for (std::size_t i = 0; i < C; ++i) {
          mpz_submul(qm(i, j).get_mpz_t(), q.get_mpz_t(), qm(i, k).get_mpz_t());
          sym(qm(i, j));
        }
        if (a(k, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!found) break;
    diag[k] = a(k, k);
  }
  IntMatrix gens(C, C);
  for (std::size_t k = 0; k < C; ++k) {
    Int e = modulus / gcd(modulus, diag[k]);
    for (std::size_t i = 0; i < C; ++i) gens(k, i) = qm(i, k) * e;
  }
  return Lattice(gens, C, modulus);
}

}  // namespace specht
