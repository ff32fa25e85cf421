#include "specht/conm5.hpp"

#include <algorithm>

#include "specht/errors.hpp"
#include "specht/hooks.hpp"
#include "specht/specht_basis.hpp"

namespace specht {

Partition two_column_shape(int n, int h, int k) {
  if (h < 0 || 2 * h > n || k < 0 || k > h) throw DomainError("need 0 <= k <= h <= n/2");
  std::vector<int> parts(h - k, 2);
  parts.insert(parts.end(), n - 2 * h + 2 * k, 1);
  return Partition(parts);
}

int zeta_position_sum(const std::vector<int>& column, const std::vector<int>& zeta) {
  int s = 0;
  std::size_t from = 0;
  for (int z : zeta) {
    auto it = std::find(column.begin() + from, column.end(), z);
    if (it == column.end()) throw DomainError("zeta is not a subtuple of the column");
    from = static_cast<std::size_t>(it - column.begin()) + 1;
    s += static_cast<int>(from);
  }
  return s;
}

Tableau move_to_first_column(const Tableau& a, const std::vector<int>& zeta) {
  std::vector<int> first = a.column(0), second = a.column(1);
  for (int z : zeta) {
    auto it = std::find(second.begin(), second.end(), z);
    if (it == second.end()) throw DomainError("zeta is not in the second column");
    second.erase(it);
    first.push_back(z);
  }
  std::vector<std::vector<int>> cols{first};
  if (!second.empty()) cols.push_back(second);
  return Tableau::from_columns(cols);
}

std::vector<Int> lowering_map(const Tableau& a, int k) {
  const std::vector<int> second = a.column(1);
  const int h = static_cast<int>(second.size());
  const int n = a.shape().n();
  if (a.num_columns() > 2 || k < 0 || k > h) throw DomainError("lowering map needs a two-column tableau and 0 <= k <= h");
  const SpechtBasis& target = specht_basis(two_column_shape(n, h, k));
  std::vector<Int> out(target.dim());
  std::vector<char> pick(h, 0);
  std::fill(pick.begin(), pick.begin() + k, 1);
  do {
    std::vector<int> zeta;
    int pos_sum = 0;
    for (int i = 0; i < h; ++i)
      if (pick[i]) {
        zeta.push_back(second[i]);
        pos_sum += i + 1;
      }
    auto coords = target.straighten(move_to_first_column(a, zeta));
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (pos_sum % 2) out[i] -= coords[i];
      else out[i] += coords[i];
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

IntMatrix lowering_matrix(int n, int h, int k) {
  const SpechtBasis& source = specht_basis(two_column_shape(n, h, 0));
  const SpechtBasis& target = specht_basis(two_column_shape(n, h, k));
  IntMatrix m(target.dim(), source.dim());
  for (std::size_t j = 0; j < source.dim(); ++j) {
    auto col = lowering_map(source.tableaux()[j], k);
    for (std::size_t i = 0; i < target.dim(); ++i) m(i, j) = col[i];
  }
  return m;
}

Conm5Report conm5_check(int n, int h) {
  if (h < 1 || 2 * h > n) throw DomainError("conm5 needs 1 <= h <= n/2");
  Conm5Report rep;
  rep.n = n;
  rep.h = h;
  const Partition top = two_column_shape(n, h, 0);
  const std::size_t d = dim_specht(top);
  rep.modulus = index_quotient(top);
  const int b = n - 2 * h + 1;

  IntMatrix basis = IntMatrix::identity(d);  // rows span the running intersection
  Int bound = 1;                               // the intersection contains bound * Z^d
  rep.indices.push_back(1);
  for (int k = 1; k <= h; ++k) {
    Int gamma = 0;
    for (std::size_t i = 0; i < basis.rows(); ++i)
      for (std::size_t j = 0; j < d; ++j) gamma = gcd(gamma, basis(i, j));
    rep.gammas.push_back(gamma);
    Int kq = quasi_factorial(k);
    Int scale = kq / gcd(kq, gamma);
    const Int mod = b + k;
    // coordinates y with x = basis^T y
    IntMatrix lowered = (lowering_matrix(n, h, k) * basis.transpose()).scaled(scale);
    Lattice ky = kernel_mod(lowered, mod);
    bound *= mod;
    IntMatrix next = ky.basis() * basis;
    Lattice inter(next, d, bound);
    basis = inter.basis();
    rep.indices.push_back(inter.index());
    rep.intersection = inter;
  }
  rep.gram_kernel = kernel_mod(gram_matrix(top), rep.modulus);
  rep.holds = rep.intersection == rep.gram_kernel;
  return rep;
}

}  // namespace specht
