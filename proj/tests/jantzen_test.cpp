#include <gtest/gtest.h>

#include "oracles.hpp"
#include "specht/errors.hpp"
#include "specht/hooks.hpp"
#include "specht/jantzen.hpp"
#include "specht/oracle.hpp"
#include "specht/specht_basis.hpp"

using namespace specht;

namespace {

std::vector<Partition> partitions_upto(int n) {
  std::vector<Partition> out;
  for (int k = 1; k <= n; ++k)
    for (auto& p : partitions_of(k)) out.push_back(p);
  return out;
}

// v_p(d) profile counted directly, independent of the library routine
std::map<int, std::uint64_t> count_layers(const std::vector<Int>& d, unsigned long p) {
  std::map<int, std::uint64_t> out;
  for (const Int& x : d) ++out[oracle::vp(x, p)];
  return out;
}

}  // namespace

TEST(Layers, TwoByTwo) {
  auto chain = make_chain({2, 6});
  EXPECT_EQ(layers_from_divisors(chain, 2).layer_dims, (std::map<int, std::uint64_t>{{1, 2}}));
  EXPECT_EQ(layers_from_divisors(chain, 3).layer_dims, (std::map<int, std::uint64_t>{{0, 1}, {1, 1}}));
  EXPECT_EQ(layers_from_divisors(chain, 3).weighted(), 1u);
  EXPECT_EQ(layers_from_divisors(chain, 5).layer_dims, (std::map<int, std::uint64_t>{{0, 2}}));
}

TEST(Layers, ThreeTwoOne) {
  auto prof = layers_from_divisors(gram_chain(Partition({3, 2, 1})), 3);
  EXPECT_EQ(prof.layer_dims, (std::map<int, std::uint64_t>{{0, 4}, {1, 8}, {2, 4}}));
  EXPECT_EQ(prof.total(), 16u);
  EXPECT_EQ(prof.top_layer(), 2);
}

TEST(Layers, FiltrationAgreesWithDivisors) {
  for (const auto& l : partitions_upto(7)) {
    IntMatrix g = gram_matrix(l);
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
      auto direct = layers_from_filtration(g, p);
      auto via = layers_from_divisors(gram_chain(l), p);
      ASSERT_EQ(direct, via) << l.to_string() << " p=" << p;
      EXPECT_EQ(via.layer_dims, count_layers(gram_chain(l).divisors, p));
      auto dims = filtration_dims(g, p);
      ASSERT_FALSE(dims.empty());
      EXPECT_EQ(dims.front(), dim_specht(l));
      EXPECT_EQ(dims.back(), 0u);
      for (std::size_t i = 1; i < dims.size(); ++i) EXPECT_LE(dims[i], dims[i - 1]);
      EXPECT_EQ(dims[1], dim_specht(l) - dim_simple(l, p));
    }
  }
}

TEST(Layers, WeightedSumIsDeterminantValuation) {
  for (const auto& l : partitions_upto(8)) {
    const Int det = gram_smith(l).det;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul})
      EXPECT_EQ(layers_from_divisors(gram_chain(l), p).weighted(), static_cast<std::uint64_t>(oracle::vp(det, p)))
          << l.to_string();
  }
}

TEST(Layers, LargestDivisorDividesIndexQuotient) {
  for (const auto& l : partitions_upto(8)) {
    const Int q = index_quotient(l);
    const auto& d = gram_chain(l).divisors;
    EXPECT_EQ(q % d.back(), 0) << l.to_string();
  }
}

TEST(Distribute, ForcedAndOpenCases) {
  using M = std::map<int, std::uint64_t>;
  EXPECT_EQ(distribute_multiplicity(1, 3, 0), M({{3, 1}}));
  EXPECT_EQ(distribute_multiplicity(3, 0, 0), M({{0, 3}}));
  EXPECT_EQ(distribute_multiplicity(2, 2, 1), M({{1, 2}}));
  EXPECT_EQ(distribute_multiplicity(0, 0, 2), M());
  EXPECT_EQ(distribute_multiplicity(2, 2, 0), std::nullopt);
  EXPECT_EQ(distribute_multiplicity(2, 5, 1), std::nullopt);
  EXPECT_THROW(distribute_multiplicity(0, 1, 0), InconsistencyError);
  EXPECT_THROW(distribute_multiplicity(3, 2, 1), InconsistencyError);
  EXPECT_THROW(distribute_multiplicity(1, 1, -1), DomainError);
}

TEST(Duality, TransposePairsUpToSeven) {
  for (const auto& l : partitions_upto(7))
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
      auto r = duality_check(l, p);
      EXPECT_TRUE(r.ok()) << l.to_string() << " p=" << p;
      EXPECT_EQ(r.mirror_height, oracle::vp(index_quotient(l), p));
    }
}
