#include <gtest/gtest.h>

#include "oracles.hpp"
#include "specht/diagram_ops.hpp"
#include "specht/errors.hpp"
#include "specht/hooks.hpp"
#include "specht/tableau.hpp"

using namespace specht;

TEST(Partition, ParsesPlainAndExponentForms) {
  EXPECT_EQ(parse_partition("3,2,1").parts(), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(parse_partition("2^2,1^2").parts(), (std::vector<int>{2, 2, 1, 1}));
  EXPECT_EQ(parse_partition("(3, 2, 1)").parts(), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(parse_partition("1^4").n(), 4);
}

TEST(Partition, RejectsMalformedInput) {
  EXPECT_THROW(parse_partition("1,2"), std::exception);
  EXPECT_THROW(parse_partition("3,-1"), std::exception);
  EXPECT_THROW(parse_partition("a,b"), ParseError);
  EXPECT_THROW(parse_partition("2^x"), ParseError);
  EXPECT_THROW(Partition({1, 2}), std::exception);
}

TEST(Partition, RendersCanonically) {
  EXPECT_EQ(parse_partition("2^2,1^2").to_string(), "2,2,1,1");
  EXPECT_EQ(Partition({3, 0, 0}).to_string(), "3");
}

TEST(Partition, CountsMatchPartitionNumbers) {
  const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 1; n <= 10; ++n) {
    auto all = partitions_of(n);
    EXPECT_EQ(all.size(), p[n]) << n;
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end(), reverse_lex_less));
    for (const auto& l : all) EXPECT_EQ(l.n(), n);
  }
  EXPECT_EQ(partitions_of(4).front(), Partition({4}));
  EXPECT_EQ(partitions_of(4).back(), Partition({1, 1, 1, 1}));
}

TEST(Partition, TransposeIsAnInvolution) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    Partition l = oracle::random_partition(rng, 1 + trial % 14);
    EXPECT_EQ(l.transpose().transpose(), l);
    EXPECT_EQ(l.transpose().n(), l.n());
    for (int j = 1; j <= l.part(1); ++j) EXPECT_EQ(l.column(j), l.transpose().part(j));
  }
  EXPECT_TRUE(Partition({3, 2, 1}).is_symmetric());
  EXPECT_FALSE(Partition({3, 1}).is_symmetric());
}

TEST(Hooks, FirstRowAndCellHooks) {
  EXPECT_EQ(hook_data(Partition({3, 2})).first_row, (std::vector<int>{4, 3}));
  EXPECT_TRUE(hook_data(Partition({5})).first_row.empty());
  const auto h = hook_data(Partition({2, 2})).cell_hooks;
  EXPECT_EQ(h, (std::vector<std::vector<int>>{{3, 2}, {2, 1}}));
  EXPECT_EQ(hook_product(Partition({2, 2})) * dim_specht(Partition({2, 2})), 24);
}

TEST(Hooks, HookMultisetIsTransposeInvariant) {
  for (int n = 1; n <= 9; ++n)
    for (const auto& l : partitions_of(n)) {
      std::multiset<int> a, b;
      for (const auto& r : hook_data(l).cell_hooks) a.insert(r.begin(), r.end());
      for (const auto& r : hook_data(l.transpose()).cell_hooks) b.insert(r.begin(), r.end());
      EXPECT_EQ(a, b) << l.to_string();
    }
}

TEST(Hooks, DimensionMatchesHookFormulaAndEnumeration) {
  for (int n = 1; n <= 12; ++n)
    for (const auto& l : partitions_of(n)) {
      ASSERT_EQ(Int(static_cast<unsigned long>(dim_specht(l))), oracle::hook_formula_dim(l)) << l.to_string();
      EXPECT_EQ(index_quotient(l), hook_product(l));
    }
  for (int n = 1; n <= 7; ++n)
    for (const auto& l : partitions_of(n)) EXPECT_EQ(dim_specht(l), oracle::count_standard_fillings(l)) << l.to_string();
}

TEST(Hooks, DimensionExamples) {
  EXPECT_EQ(dim_specht(Partition({4, 2})), 9u);
  EXPECT_EQ(dim_specht(Partition({3, 2, 1})), 16u);
  EXPECT_EQ(dim_specht(Partition(std::vector<int>(6, 1))), 1u);
  for (int n = 2; n <= 14; ++n)
    for (int m = 0; 2 * m <= n; ++m)
      EXPECT_EQ(Int(static_cast<unsigned long>(dim_specht(Partition({n - m, m})))) * (n - m + 1),
                binomial(n, m) * (n - 2 * m + 1));
}

TEST(Hooks, JamesFactor) {
  EXPECT_EQ(james_factor(Partition({2, 2, 2})), 6);
  EXPECT_EQ(james_factor(Partition({2, 2})), 2);
  EXPECT_EQ(james_factor(Partition({2, 1, 1})), 2);
  EXPECT_EQ(james_factor(Partition({4})), 1);
}

TEST(Regularity, Examples) {
  EXPECT_FALSE(regularity(Partition({2, 2}), 2).is_regular);
  EXPECT_TRUE(regularity(Partition({3, 2, 1}), 2).is_regular);
  auto r = regularity(Partition({1, 1, 1}), 3);
  EXPECT_FALSE(r.is_regular);
  EXPECT_EQ(r.regularized, Partition({2, 1}));
  EXPECT_EQ(regularity(Partition({3, 2}), 2).regularized, Partition({3, 2}));
  EXPECT_EQ(regularity(Partition({1, 1}), 2).regularized, Partition({2}));
}

// Regularization must land on a p-regular partition of the same size and
// dominate the input.
TEST(Regularity, RegularizedIsRegularAndDominates) {
  for (int n = 1; n <= 10; ++n)
    for (const auto& l : partitions_of(n))
      for (int p : {2, 3, 5, 7}) {
        auto r = regularity(l, p);
        bool regular = true;
        for (int i = 1; i <= l.part(1); ++i)
          if (l.column(i) - l.column(i + 1) >= p) regular = false;
        EXPECT_EQ(r.is_regular, regular);
        EXPECT_EQ(r.regularized.n(), n);
        EXPECT_TRUE(regularity(r.regularized, p).is_regular) << l.to_string() << " p=" << p;
        if (regular) EXPECT_EQ(r.regularized, l);
        int a = 0, b = 0;
        for (int i = 1; i <= std::max(l.length(), r.regularized.length()); ++i) {
          a += l.part(i);
          b += r.regularized.part(i);
          EXPECT_GE(b, a);
        }
      }
}

TEST(DiagramOps, CarterPayneShiftExamples) {
  EXPECT_EQ(carter_payne_shift(Partition({3, 2}), 2), Partition({4, 1}));
  EXPECT_EQ(carter_payne_shift(Partition({2, 2}), 2), Partition({3, 1}));
  EXPECT_EQ(carter_payne_shift(Partition({3, 3, 1, 1}), 1), Partition({4, 3, 1}));
  EXPECT_THROW(carter_payne_shift(Partition({3, 2}), 3), DomainError);
}

TEST(DiagramOps, StripSkewHookExamples) {
  EXPECT_EQ(strip_skew_hook(Partition({3, 2}), 2, 2), Partition({4, 1}));
  EXPECT_EQ(strip_skew_hook(Partition({2, 2, 1}), 2, 1), Partition({5}));
  EXPECT_THROW(strip_skew_hook(Partition({2, 2, 1}), 3, 2), DomainError);
}

// Walks the rim from the end of row i down to the bottom of column t.
static Partition rim_strip_oracle(const Partition& l, int i, int t) {
  std::vector<int> rows = l.parts();
  const int len = cell_hook_length(l, i, t);
  // rim cells of (i,t) in row r: columns max(t, lambda_{r+1}) .. lambda_r,
  // and t .. lambda_r in the bottom row of column t
  const int last = l.column(t);
  std::vector<int> out = rows;
  for (int r = i; r <= last; ++r) out[r - 1] = r < last ? std::max(t, l.part(r + 1)) - 1 : t - 1;
  int removed = 0;
  for (int r = 0; r < l.length(); ++r) removed += rows[r] - out[r];
  EXPECT_EQ(removed, len);
  std::sort(out.rbegin(), out.rend());
  out[0] += len;
  return Partition(out);
}

TEST(DiagramOps, StripAndShiftProperties) {
  for (int n = 2; n <= 10; ++n)
    for (const auto& l : partitions_of(n)) {
      for (int j = 1; j <= l.part(2); ++j) {
        const Partition shift = carter_payne_shift(l, j);
        EXPECT_EQ(shift.n(), n);
        EXPECT_EQ(strip_skew_hook(l, l.column(j), j), shift) << l.to_string() << " j=" << j;
        EXPECT_EQ(shift.part(1), l.part(1) + l.part(l.column(j)) - j + 1);
        EXPECT_EQ(shift.part(l.column(j)), j - 1);
      }
      for (int t = 1; t <= l.part(1); ++t)
        for (int i = 2; i <= l.column(t); ++i) {
          const Partition s = strip_skew_hook(l, i, t);
          EXPECT_EQ(s.n(), n);
          EXPECT_EQ(s, rim_strip_oracle(l, i, t)) << l.to_string() << " (" << i << "," << t << ")";
        }
    }
}

TEST(Tableau, StandardTableauxMatchBruteForce) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& l : partitions_of(n)) {
      auto tabs = standard_tableaux(l);
      auto brute = oracle::standard_tableaux(l);
      ASSERT_EQ(tabs.size(), brute.size());
      std::sort(brute.begin(), brute.end(), [](const auto& a, const auto& b) {
        std::vector<int> wa, wb;
        for (const auto& r : a) wa.insert(wa.end(), r.begin(), r.end());
        for (const auto& r : b) wb.insert(wb.end(), r.begin(), r.end());
        return wa < wb;
      });
      for (std::size_t i = 0; i < tabs.size(); ++i) {
        EXPECT_TRUE(tabs[i].is_standard());
        EXPECT_EQ(tabs[i].rows(), brute[i]);
      }
    }
}

TEST(Tableau, ValidatesEntries) {
  EXPECT_THROW(Tableau({{1, 2}, {2}}), std::exception);
  EXPECT_THROW(Tableau({{1, 4}, {2}}), std::exception);
  Tableau t({{1, 3}, {2}});
  EXPECT_TRUE(t.is_standard());
  EXPECT_EQ(t.column(0), (std::vector<int>{1, 2}));
  EXPECT_FALSE(Tableau({{3, 1}, {2}}).is_standard());
  EXPECT_EQ(Tabloid({{3, 1}, {2}}), Tabloid({{1, 3}, {2}}));
}

TEST(Arith, Basics) {
  EXPECT_EQ(quasi_factorial(4), 12);
  EXPECT_EQ(quasi_factorial(1), 1);
  EXPECT_EQ(quasi_factorial(9), 2520);
  EXPECT_EQ(valuation(Int(48), 2), 4);
  EXPECT_EQ(valuation(-9LL, 3), 2);
  EXPECT_EQ(rational_valuation(7, 2, 2), -1);
  EXPECT_EQ(rational_valuation(8, 3, 2), 3);
  EXPECT_EQ(binomial(5, 7), 0);
  EXPECT_EQ(binomial(6, 2), 15);
  EXPECT_TRUE(is_perfect_square(Int(144)));
  EXPECT_FALSE(is_perfect_square(Int(-4)));
  EXPECT_EQ(primes_up_to(12), (std::vector<unsigned long>{2, 3, 5, 7, 11}));
  EXPECT_EQ(from_decimal(to_decimal(factorial(30))), factorial(30));
  for (long m = 1; m <= 20; ++m) {
    Int l = 1;
    for (long k = 1; k <= m; ++k) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), k);
    EXPECT_EQ(quasi_factorial(m), l);
  }
}
