#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "specht/errors.hpp"
#include "specht/hooks.hpp"
#include "specht/oracle.hpp"
#include "specht/specht_basis.hpp"
#include "specht/two_column.hpp"

using namespace specht;

namespace {

std::vector<Partition> partitions_upto(int n) {
  std::vector<Partition> out;
  for (int k = 1; k <= n; ++k)
    for (auto& p : partitions_of(k)) out.push_back(p);
  return out;
}

Tableau random_tableau(std::mt19937& rng, const Partition& shape) {
  std::vector<int> w(shape.n());
  std::iota(w.begin(), w.end(), 1);
  std::shuffle(w.begin(), w.end(), rng);
  std::vector<std::vector<int>> rows;
  std::size_t k = 0;
  for (int len : shape.parts()) {
    rows.emplace_back(w.begin() + k, w.begin() + k + len);
    k += len;
  }
  return Tableau(rows);
}

TabloidVector combine(const SpechtBasis& b, const std::vector<Int>& c) {
  TabloidVector v(b.shape());
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) v += c[i] * b.polytabloid(i);
  return v;
}

}  // namespace

TEST(Polytabloid, SmallExpansions) {
  auto e = expand_polytabloid(Tableau({{1, 2}, {3}}));
  EXPECT_EQ(e.terms().size(), 2u);
  EXPECT_EQ(e.coefficient(Tabloid({{1, 2}, {3}})), 1);
  EXPECT_EQ(e.coefficient(Tabloid({{2, 3}, {1}})), -1);
  auto col = expand_polytabloid(Tableau({{1}, {2}}));
  EXPECT_EQ(col.terms().size(), 2u);
  EXPECT_EQ(pair(col, col), 2);
}

TEST(Polytabloid, MatchesOracleExpansion) {
  std::mt19937 rng(21);
  for (const auto& l : partitions_upto(7)) {
    Tableau t = random_tableau(rng, l);
    auto mine = expand_polytabloid(t);
    auto theirs = oracle::polytabloid(t.rows());
    ASSERT_EQ(mine.terms().size(), theirs.size()) << l.to_string();
    for (const auto& [tab, c] : theirs) {
      std::vector<std::vector<int>> rows;
      for (const auto& s : tab) rows.emplace_back(s.begin(), s.end());
      EXPECT_EQ(mine.coefficient(Tabloid(rows)), Int(static_cast<long>(c)));
    }
    auto sig = expand_signed(t);
    EXPECT_EQ(pair_signed(sig, sig), pair(mine, mine));
  }
}

TEST(Polytabloid, IdentityActionAndComposition) {
  std::mt19937 rng(22);
  for (const auto& l : partitions_upto(6)) {
    Tableau t = random_tableau(rng, l);
    auto v = expand_polytabloid(t);
    std::vector<int> id(l.n());
    std::iota(id.begin(), id.end(), 1);
    EXPECT_EQ(act(v, id), v);
    std::vector<int> sigma = id;
    std::shuffle(sigma.begin(), sigma.end(), rng);
    // e_t sigma = e_{t sigma}
    std::vector<std::vector<int>> moved = t.rows();
    for (auto& r : moved)
      for (int& x : r) x = sigma[x - 1];
    EXPECT_EQ(act(v, sigma), expand_polytabloid(Tableau(moved)));
  }
}

TEST(Gram, MatchesOracle) {
  for (const auto& l : partitions_upto(6)) EXPECT_EQ(gram_matrix(l), oracle::gram(l)) << l.to_string();
}

TEST(Gram, SymmetricWithPositiveDiagonal) {
  for (const auto& l : partitions_upto(8)) {
    IntMatrix g = gram_matrix(l);
    ASSERT_EQ(g.rows(), dim_specht(l));
    for (std::size_t i = 0; i < g.rows(); ++i) {
      EXPECT_GT(g(i, i), 0);
      for (std::size_t j = 0; j < i; ++j) EXPECT_EQ(g(i, j), g(j, i));
    }
    const Int f = james_factor(l);
    IntMatrix s = gram_matrix(l, true);
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = 0; j < g.cols(); ++j) EXPECT_EQ(s(i, j) * f, g(i, j));
  }
}

TEST(Gram, ScaledTwoSquaredOneSquaredEntry) {
  IntMatrix s = gram_matrix(Partition({2, 2, 1, 1}), true);
  EXPECT_EQ(s(0, 0), 12);
  EXPECT_EQ(gram_matrix(Partition({2, 2})), IntMatrix::from_rows(std::vector<std::vector<long long>>{{4, 2}, {2, 4}}));
}

TEST(Gram, ChainsOfSmallShapes) {
  EXPECT_EQ(gram_chain(Partition({2, 2})).compact(), "2 6");
  EXPECT_EQ(gram_chain(Partition({3, 2, 1})).compact(), "1^4 3^4 15^4 45^4");
  EXPECT_EQ(gram_chain(Partition({1, 1, 1})).compact(), "6");
  EXPECT_EQ(gram_chain(Partition({3})).compact(), "1");
  // gcd-of-minors oracle is exponential in the dimension
  for (const auto& l : partitions_upto(7))
    if (dim_specht(l) <= 9) EXPECT_EQ(gram_chain(l).divisors, oracle::minors_chain(oracle::gram(l))) << l.to_string();
}

TEST(Straighten, RoundTripsArbitraryTableaux) {
  std::mt19937 rng(23);
  for (const auto& l : partitions_upto(7)) {
    const auto& b = specht_basis(l);
    for (int k = 0; k < 3; ++k) {
      Tableau t = random_tableau(rng, l);
      auto c = b.straighten(t);
      ASSERT_EQ(c.size(), b.dim());
      EXPECT_EQ(combine(b, c), expand_polytabloid(t)) << t.to_string();
    }
    for (std::size_t i = 0; i < b.dim(); ++i) {
      auto c = b.straighten(b.tableaux()[i]);
      for (std::size_t j = 0; j < c.size(); ++j) EXPECT_EQ(c[j], i == j ? 1 : 0);
      EXPECT_EQ(b.index_of(b.tableaux()[i]), i);
    }
  }
}

TEST(Straighten, RejectsVectorsOutsideTheModule) {
  const auto& b = specht_basis(Partition({2, 1}));
  TabloidVector lone(Partition({2, 1}));
  lone.add(Tabloid({{1, 2}, {3}}), 1);
  EXPECT_THROW(b.straighten(lone), MembershipError);
  EXPECT_EQ(b.index_of(Tableau({{2, 1}, {3}})), b.dim());
}

TEST(RowSymmetrize, TwoColumnExpansion) {
  for (int n : {6, 7}) {
    auto lhs = two_column_row_symmetrized(n, {3, 4});
    auto P = [n](int a, int b) { return two_column_polytabloid(n, {a, b}); };
    EXPECT_EQ(lhs, P(3, 4) - P(1, 4) + P(3, 2) + P(1, 2)) << n;
  }
}

// Pairing a row-symmetrized polytabloid with v picks out n!/dim times the
// coefficient of that tabloid in v.
TEST(RowSymmetrize, PairingExtractsCoefficient) {
  std::mt19937 rng(24);
  for (const auto& l : partitions_upto(7)) {
    const auto& b = specht_basis(l);
    const Int scale = index_quotient(l);
    Tableau t = random_tableau(rng, l);
    auto r = row_symmetrize(t);
    std::vector<Int> c(b.dim());
    for (auto& x : c) x = std::uniform_int_distribution<int>(-3, 3)(rng);
    auto v = combine(b, c);
    EXPECT_EQ(pair(r, v), scale * v.coefficient(Tabloid::of(t))) << l.to_string();
  }
}

TEST(DimSimple, SmallCases) {
  EXPECT_EQ(dim_simple(Partition({4, 1}), 3), 4u);
  EXPECT_EQ(dim_simple(Partition({2, 2}), 2), 0u);
  EXPECT_EQ(dim_simple(Partition({2, 2}), 3), 1u);
  EXPECT_EQ(dim_simple(Partition({1, 1, 1}), 3), 0u);
}
