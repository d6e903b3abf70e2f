#include "dpc/critical.hpp"

#include <gtest/gtest.h>

#include <random>

#include "dpc/constructions.hpp"
#include "dpc/solver.hpp"
#include "oracle.hpp"

namespace dpc {
namespace {

const Multigraph kDouble(2, {{0, 1}, {0, 1}});
const Multigraph kTriple(2, {{0, 1}, {0, 1}, {0, 1}});

// Every split of V into nonempty A and B has a vertex of B that is heavy.
void ExpectPartitionProperty(const Multigraph& g, int i) {
  const std::size_t n = g.num_vertices();
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    std::vector<Vertex> a;
    for (Vertex v = 0; v < n; ++v) {
      if ((mask >> v) & 1U) a.push_back(v);
    }
    EXPECT_TRUE(partition_witness(g, i, a).has_value()) << "mask " << mask;
  }
}

TEST(IsCriticalTest, SmallMultigraphs) {
  EXPECT_TRUE(is_critical(kTriple, {0, 1}));
  EXPECT_FALSE(is_critical(kDouble, {0, 1}));
  // Four parallel edges are not colorable, but neither is any triple inside.
  EXPECT_FALSE(is_critical(kTriple.with_edge(0, 1), {0, 1}));
  EXPECT_FALSE(is_critical(Multigraph(2, {{0, 1}}), {0, 0}));
  EXPECT_TRUE(is_critical(kDouble, {0, 0}));
}

TEST(IsCriticalTest, Families) {
  EXPECT_TRUE(is_critical(build_equal(1, 1).graph, {1, 1}));
  EXPECT_TRUE(is_critical(build_zeroj(1, 1).graph, {0, 1}));
  EXPECT_TRUE(is_critical(build_zeroj(1, 2).graph, {0, 1}));
  EXPECT_TRUE(is_critical(build_equal(1, 2).graph, {1, 1}));
}

TEST(IsCriticalTest, IsolatedVertices) {
  EXPECT_FALSE(is_critical(Multigraph(0), {0, 1}));
  EXPECT_FALSE(is_critical(kTriple.with_vertices(1), {0, 1}));
  EXPECT_FALSE(is_critical(Multigraph(1), {0, 1}));
  EXPECT_TRUE(is_critical(Multigraph(1), {0, 1}, Toughness::scalar({2})));
  EXPECT_FALSE(is_critical(Multigraph(1), {0, 1}, Toughness::scalar({1})));
}

TEST(IsCriticalTest, ToughnessMakesSmallGraphsCritical) {
  // Both ends are forced rich with cap 0, so an Even edge cannot be colored.
  const Multigraph g(2, {{0, 1}});
  const Toughness t = Toughness::scalar({1, 1});
  EXPECT_TRUE(is_critical(g, {0, 1}, t));
}

TEST(IsCriticalTest, AgreesWithDefinitionOnRandomGraphs) {
  std::mt19937_64 rng(3003);
  int critical = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    const Multigraph g = oracle::random_multigraph(rng, n, 1 + rng() % 6);
    if (g.min_degree() == 0) continue;
    const int i = static_cast<int>(rng() % 2);
    const int j = i + static_cast<int>(rng() % 2);
    const bool expected = oracle::critical_by_definition(g, i, j);
    critical += expected;
    EXPECT_EQ(is_critical(g, {i, j}), expected);
  }
  EXPECT_GT(critical, 0);
}

TEST(IsCriticalTest, ThreadCountDoesNotMatter) {
  Limits many;
  many.threads = 8;
  EXPECT_TRUE(is_critical(build_equal(1, 2).graph, {1, 1}, many));
  EXPECT_FALSE(is_critical(kDouble, {0, 1}, many));
}

TEST(CheckBoundsTest, Reports) {
  const BoundReport triple = check_bounds(kTriple, {0, 1});
  ASSERT_TRUE(triple.bound.has_value());
  EXPECT_EQ(triple.edges, 3);
  EXPECT_TRUE(triple.holds);
  EXPECT_TRUE(triple.sharp);
  ASSERT_TRUE(triple.potential.has_value());
  EXPECT_TRUE(triple.potential_holds);

  const auto large = build_large(1, 3, 0);
  const BoundReport lr = check_bounds(large.graph, {1, 3});
  EXPECT_EQ(lr.bound->numerator, 22);
  EXPECT_EQ(lr.bound->denominator, 2);
  EXPECT_TRUE(lr.sharp);
  EXPECT_LE(lr.potential->value, -1);
  EXPECT_TRUE(lr.potential_holds);

  const BoundReport above = check_bounds(kTriple.with_edge(0, 1), {0, 1});
  EXPECT_TRUE(above.holds);
  EXPECT_FALSE(above.sharp);

  const BoundReport eq = check_bounds(build_equal(1, 2).graph, {1, 1});
  EXPECT_TRUE(eq.sharp);
  EXPECT_FALSE(eq.potential.has_value());

  const BoundReport ip = check_bounds(build_iplusone(1, 0).graph, {1, 2});
  EXPECT_TRUE(ip.sharp);
  ASSERT_TRUE(ip.threshold.has_value());
  EXPECT_EQ(*ip.threshold, -1);
  EXPECT_TRUE(ip.potential_holds);

  const BoundReport zz = check_bounds(Multigraph(2, {{0, 1}}), {0, 0});
  EXPECT_FALSE(zz.bound.has_value());
}

TEST(FdpSearchTest, TwoVerticesZeroOne) {
  const auto found = fdp_search({0, 1}, 2, 4);
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(found->edges, 3);
  EXPECT_EQ(found->witness, kTriple);
  EXPECT_FALSE(fdp_search({0, 1}, 2, 2).has_value());
}

TEST(FdpSearchTest, FloorComesFromTheEdgeBound) {
  EXPECT_FALSE(fdp_search({0, 1}, 3, 3).has_value());
  EXPECT_FALSE(fdp_search({0, 1}, 1, 5).has_value());
}

TEST(FdpSearchTest, ThreeVerticesOneOne) {
  const auto found = fdp_search({1, 1}, 3, 5);
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(found->edges, 4);
  EXPECT_TRUE(oracle::critical_by_definition(found->witness, 1, 1));
  EXPECT_GE(found->witness.min_degree(), 2u);
  EXPECT_TRUE(check_bounds(found->witness, {1, 1}).holds);
  ExpectPartitionProperty(found->witness, 1);
}

TEST(FdpSearchTest, DeterministicAcrossThreads) {
  Limits many;
  many.threads = 8;
  const auto a = fdp_search({1, 1}, 3, 5);
  const auto b = fdp_search({1, 1}, 3, 5, many);
  ASSERT_TRUE(a && b);
  EXPECT_EQ(a->witness, b->witness);
}

TEST(FdpSearchTest, RespectsLimits) {
  EXPECT_THROW(fdp_search({0, 1}, 6, 8), BudgetExceeded);
  EXPECT_THROW(fdp_search({0, 1}, 3, 11), BudgetExceeded);
}

TEST(PartitionPropertyTest, EqualFamilies) {
  ExpectPartitionProperty(build_equal(1, 1).graph, 1);
  ExpectPartitionProperty(build_equal(1, 2).graph, 1);
  ExpectPartitionProperty(build_equal(2, 1).graph, 2);
}

}  // namespace
}  // namespace dpc
