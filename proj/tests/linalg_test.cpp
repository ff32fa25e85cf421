#include <gtest/gtest.h>

#include "oracles.hpp"
#include "specht/divisor_chain.hpp"
#include "specht/errors.hpp"
#include "specht/lattice.hpp"
#include "specht/smith.hpp"

using namespace specht;

namespace {

std::vector<Int> chain_of(const IntMatrix& m) { return smith_normal_form(m).chain.divisors; }

// U * diag(d) * V with random unimodular U, V built from elementary moves.
IntMatrix disguise(std::mt19937& rng, const std::vector<Int>& d, int moves) {
  const std::size_t n = d.size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = d[i];
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int k = 0; k < moves; ++k) {
    std::size_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    const int c = coef(rng);
    if (k % 2) {
      for (std::size_t j = 0; j < n; ++j) m(a, j) += c * m(b, j);
    } else {
      for (std::size_t i = 0; i < n; ++i) m(i, a) += c * m(i, b);
    }
  }
  return m;
}

IntMatrix permute(const IntMatrix& m, const std::vector<std::size_t>& rp, const std::vector<std::size_t>& cp) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(rp[i], cp[j]);
  return out;
}

}  // namespace

TEST(Smith, SmallExamples) {
  EXPECT_EQ(chain_of(IntMatrix::from_rows(std::vector<std::vector<long long>>{{2, 4}, {4, 14}})),
            (std::vector<Int>{2, 6}));
  EXPECT_EQ(chain_of(IntMatrix::identity(5)), std::vector<Int>(5, 1));
  auto r = smith_normal_form(IntMatrix::from_rows(std::vector<std::vector<long long>>{{1, 2, 3}, {2, 4, 6}}));
  EXPECT_EQ(r.chain.divisors, std::vector<Int>{1});
  EXPECT_EQ(r.chain.zero_count, 1u);
}

TEST(Smith, MatchesMinorsOracleOnRandomSmallMatrices) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
    IntMatrix m = oracle::random_matrix(rng, r, c, -9, 9);
    auto want = oracle::minors_chain(m);
    auto got = smith_normal_form(m);
    ASSERT_EQ(got.chain.divisors, want) << matrix_to_json(m);
    EXPECT_EQ(got.chain.rank() + got.chain.zero_count, std::min(r, c));
    EXPECT_EQ(smith_normal_form_euclid(m).chain, got.chain);
  }
}

TEST(Smith, InvariantUnderPermutationAndTransposition) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 11;
    IntMatrix m = oracle::random_matrix(rng, n, n, -9, 9);
    const auto base = smith_normal_form(m);
    std::vector<std::size_t> rp(n), cp(n);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    EXPECT_EQ(smith_normal_form(permute(m, rp, cp)).chain, base.chain);
    EXPECT_EQ(smith_normal_form(m.transpose()).chain, base.chain);
    const Int det = oracle::bareiss_det(m);
    EXPECT_EQ(base.det, det);
    if (det != 0) EXPECT_EQ(base.chain.product(), abs(det));
  }
}

TEST(Smith, DeterminantMatchesBareiss) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial;
    IntMatrix m = oracle::random_matrix(rng, n, n, -99, 99);
    EXPECT_EQ(determinant(m), oracle::bareiss_det(m)) << n;
  }
  IntMatrix singular = oracle::random_matrix(rng, 6, 6, -5, 5);
  for (std::size_t j = 0; j < 6; ++j) singular(5, j) = singular(0, j) + singular(1, j);
  EXPECT_EQ(determinant(singular), 0);
}

// Large matrices with a planted chain take the modular route.
TEST(Smith, RecoversPlantedChains) {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t n = 24 + 8 * trial;
    std::vector<Int> d;
    Int cur = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (i % 5 == 4) cur *= std::vector<int>{2, 3, 5, 7, 4, 9}[(i / 5) % 6];
      d.push_back(cur);
    }
    IntMatrix m = disguise(rng, d, 6 * static_cast<int>(n));
    const auto r = smith_normal_form(m);
    EXPECT_EQ(r.chain.divisors, d) << n;
    if (n <= 32) EXPECT_EQ(smith_normal_form_euclid(m).chain.divisors, d);
    EXPECT_EQ(abs(r.det), r.chain.product());
  }
}

TEST(Smith, LocalValuations) {
  std::mt19937 rng(15);
  std::vector<Int> d{1, 1, 2, 6, 12, 12, 72, 360};
  IntMatrix m = disguise(rng, d, 80);
  EXPECT_EQ(local_smith_valuations(m, 2), (std::vector<int>{0, 0, 1, 1, 2, 2, 3, 3}));
  EXPECT_EQ(local_smith_valuations(m, 3), (std::vector<int>{0, 0, 0, 1, 1, 1, 2, 2}));
  EXPECT_EQ(local_smith_valuations(m, 5), (std::vector<int>{0, 0, 0, 0, 0, 0, 0, 1}));
}

TEST(RankModP, CountsDivisorsPrimeToP) {
  auto g = IntMatrix::from_rows(std::vector<std::vector<long long>>{{4, 2}, {2, 4}});  // chain 2, 6
  EXPECT_EQ(rank_mod_p(g, 2), 0u);
  EXPECT_EQ(rank_mod_p(g, 3), 1u);
  EXPECT_EQ(rank_mod_p(IntMatrix::identity(7), 5), 7u);
  std::mt19937 rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + trial % 7, c = 1 + (trial / 7) % 7;
    IntMatrix m = oracle::random_matrix(rng, r, c, -6, 6);
    const auto chain = smith_normal_form(m).chain;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
      std::size_t divisible = 0;
      for (const Int& d : chain.divisors) divisible += (d % p == 0);
      EXPECT_EQ(rank_mod_p(m, p) + divisible, chain.rank());
    }
  }
}

TEST(Lattice, HermiteFormIsCanonical) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix g = oracle::random_matrix(rng, 4, 4, -7, 7);
    IntMatrix h = hermite_normal_form(g);
    // same lattice from shuffled and combined generators
    IntMatrix g2(5, 4);
    for (std::size_t j = 0; j < 4; ++j) {
      g2(0, j) = g(3, j);
      g2(1, j) = g(2, j) + 3 * g(3, j);
      g2(2, j) = g(1, j);
      g2(3, j) = g(0, j) - g(1, j);
      g2(4, j) = g(0, j) + g(2, j);
    }
    EXPECT_EQ(hermite_normal_form(g2), h);
    for (std::size_t i = 0; i < h.rows(); ++i) {
      std::size_t lead = 0;
      while (h(i, lead) == 0) ++lead;
      EXPECT_GT(h(i, lead), 0);
      for (std::size_t k = 0; k < i; ++k) {
        EXPECT_GE(h(k, lead), 0);
        EXPECT_LT(h(k, lead), h(i, lead));
      }
    }
  }
}

TEST(Lattice, KernelModExamples) {
  auto full = kernel_mod(IntMatrix::from_rows(std::vector<std::vector<long long>>{{3, 5}}), 1);
  EXPECT_TRUE(full.full_rank());
  EXPECT_EQ(full.index(), 1);
  auto two = kernel_mod(IntMatrix::from_rows(std::vector<std::vector<long long>>{{2}}), 4);
  EXPECT_EQ(two.basis(), IntMatrix::from_rows(std::vector<std::vector<long long>>{{2}}));
  auto g21 = kernel_mod(IntMatrix::from_rows(std::vector<std::vector<long long>>{{2, 1}, {1, 2}}), 3);
  EXPECT_EQ(g21.index(), 3);
}

TEST(Lattice, KernelModMatchesEnumeration) {
  std::mt19937 rng(18);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = 1 + trial % 3, c = 1 + (trial / 3) % 3;
    const int N = 1 + trial % 12;
    IntMatrix m = oracle::random_matrix(rng, r, c, -10, 10);
    Lattice k = kernel_mod(m, N);
    ASSERT_TRUE(k.full_rank());
    std::size_t solutions = 0, total = 1;
    for (std::size_t j = 0; j < c; ++j) total *= N;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<Int> v(c);
      std::size_t x = code;
      for (std::size_t j = 0; j < c; ++j) {
        v[j] = static_cast<long>(x % N);
        x /= N;
      }
      bool in = true;
      for (const Int& e : m * v)
        if (e % N != 0) in = false;
      solutions += in;
      EXPECT_EQ(k.contains(v), in);
    }
    EXPECT_EQ(k.index() * solutions, Int(static_cast<unsigned long>(total)));
  }
}

TEST(DivisorChain, AssembleAndMerge) {
  auto c = make_chain({2, 6});
  EXPECT_EQ(assemble_group(c).to_string(), "(Z/2) + (Z/6)");
  EXPECT_EQ(assemble_group(make_chain({1, 1, 1, 5})).to_string(), "(Z/5)");
  std::map<unsigned long, std::vector<Int>> parts{{2, {2, 2}}, {3, {1, 3}}};
  EXPECT_EQ(merge_p_parts(parts, 2).divisors, (std::vector<Int>{2, 6}));
  EXPECT_THROW(make_chain({2, 3}), std::exception);
  EXPECT_THROW(merge_p_parts({{2, {2, 2, 2}}}, 2), std::exception);
  EXPECT_EQ(parse_compact_chain("1^4 3^4 15^4 45^4").compact(), "1^4 3^4 15^4 45^4");
  EXPECT_EQ(make_chain({2, 6}).compact(), "2 6");
}

TEST(DivisorChain, PrimeDecompositionRoundTrip) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Int> d;
    Int cur = 1;
    const int len = 1 + trial % 9;
    for (int i = 0; i < len; ++i) {
      cur *= std::uniform_int_distribution<int>(1, 12)(rng);
      d.push_back(cur);
    }
    const auto chain = make_chain(d);
    EXPECT_EQ(merge_p_parts(decompose_by_primes(chain), chain.rank()), chain);
    EXPECT_EQ(chain_from_group(assemble_group(chain), chain.rank()), chain);
    EXPECT_EQ(assemble_group(chain).order(), chain.product());
  }
  // differently presented, same group
  EXPECT_TRUE(isomorphic(normalize_group({{6, 1}}), normalize_group({{2, 1}, {3, 1}})));
  EXPECT_FALSE(isomorphic(normalize_group({{4, 1}}), normalize_group({{2, 2}})));
}

TEST(DivisorChain, Factor) {
  EXPECT_EQ(factor(Int(360)), (std::map<unsigned long, int>{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_EQ(factor(Int(1)).size(), 0u);
  EXPECT_EQ(factor(Int("1000000007")), (std::map<unsigned long, int>{{1000000007ul, 1}}));
}

TEST(IntMatrix, JsonRoundTrip) {
  auto m = IntMatrix::from_rows(std::vector<std::vector<Int>>{{Int("123456789012345678901234567890"), -1}, {0, 7}});
  const std::string text = matrix_to_json(m);
  EXPECT_EQ(matrix_from_json(text), m);
  EXPECT_NE(text.find("\"123456789012345678901234567890\""), std::string::npos);
  EXPECT_THROW(matrix_from_json("[[1,2],[3]]"), std::exception);
}
