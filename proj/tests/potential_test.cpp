#include "dpc/potential.hpp"

#include <gtest/gtest.h>

#include <random>

#include "dpc/constructions.hpp"
#include "oracle.hpp"

namespace dpc {
namespace {

TEST(RegimeTest, Classification) {
  EXPECT_EQ(regime({0, 3}), Regime::ZeroJ);
  EXPECT_EQ(regime({1, 3}), Regime::Large);
  EXPECT_EQ(regime({2, 4}), Regime::Mid);
  EXPECT_EQ(regime({2, 3}), Regime::IPlusOne);
  EXPECT_EQ(regime({3, 3}), Regime::Equal);
  EXPECT_EQ(regime({0, 0}), Regime::ZeroZero);
  // (1,2) is both j = i+1 and j = 2i; it belongs to the i+1 regime.
  EXPECT_EQ(regime({1, 2}), Regime::IPlusOne);
}

TEST(RegimeTest, CasesPartitionAllPairs) {
  for (int i = 0; i <= 8; ++i) {
    for (int j = i; j <= 20; ++j) {
      int matches = 0;
      matches += (i == 0 && j >= 1);
      matches += (i >= 1 && j >= 2 * i + 1);
      matches += (i >= 1 && i + 2 <= j && j <= 2 * i);
      matches += (i >= 1 && j == i + 1);
      matches += (i >= 1 && j == i);
      matches += (i == 0 && j == 0);
      EXPECT_EQ(matches, 1) << i << "," << j;
    }
  }
}

TEST(WeightTest, ThresholdValues) {
  EXPECT_EQ(weight_w({1, 3}, 4), -1);
  EXPECT_EQ(weight_w({0, 2}, 3), -2);
  EXPECT_EQ(weight_w({2, 4}, 5), -2);
  EXPECT_THROW(weight_w({1, 1}, 0), std::invalid_argument);
  EXPECT_THROW(weight_w({1, 2}, 0), std::invalid_argument);
  EXPECT_THROW(weight_w({0, 0}, 0), std::invalid_argument);
  EXPECT_THROW(weight_w({1, 3}, 5), std::invalid_argument);
}

TEST(WeightTest, MatchesRegimeClosedForms) {
  for (int i = 0; i <= 6; ++i) {
    for (int j = std::max(i, 1); j <= 16; ++j) {
      const DefectParams p(i, j);
      const Regime r = regime(p);
      if (!has_scalar_potential(r)) continue;
      for (int k = 0; k <= j + 1; ++k) {
        const Potential closed = r == Regime::ZeroJ   ? 1 - k
                                 : r == Regime::Large ? 2 * i + 1 - k
                                                      : 2 * j - 2 * k;
        EXPECT_EQ(weight_w(p, k), closed) << i << "," << j << "," << k;
      }
    }
  }
}

TEST(RhoVertexTest, Values) {
  EXPECT_EQ(rho_vertex({1, 3}, Toughness::zero(1), 0), 3);
  EXPECT_EQ(rho_vertex({1, 2}, Toughness::refined_zero(1), 0), 7);
  EXPECT_EQ(rho_vertex({2, 4}, Toughness::scalar({2}), 0), 4);
  EXPECT_THROW(rho_vertex({1, 2}, Toughness::zero(1), 0), std::invalid_argument);
  EXPECT_THROW(rho_vertex({1, 3}, Toughness::refined_zero(1), 0), std::invalid_argument);
  EXPECT_THROW(rho_vertex({1, 1}, Toughness::zero(1), 0), std::invalid_argument);
}

TEST(RhoVertexTest, RefinedValueIsSymmetricUnderSwap) {
  for (int i = 1; i <= 5; ++i) {
    const DefectParams p(i, i + 1);
    for (int tp = 0; tp <= i + 1; ++tp) {
      for (int tr = 0; tr <= i + 1; ++tr) {
        EXPECT_EQ(rho_vertex(p, Toughness::refined({{tp, tr}}), 0),
                  rho_vertex(p, Toughness::refined({{tr, tp}}), 0));
      }
    }
  }
}

TEST(RhoSetTest, Values) {
  EXPECT_EQ(rho_set(Multigraph(2, {{0, 1}}), {1, 3}, Toughness::zero(2), std::vector<Vertex>{}), 0);
  EXPECT_EQ(rho_set(Multigraph(2, {{0, 1}}), {1, 3}, Toughness::zero(2), std::vector<Vertex>{0, 1}),
            4);
  const auto inst = build_zeroj(1, 2);
  const std::vector<Vertex> all{0, 1, 2, 3, 4, 5};
  EXPECT_EQ(rho_set(inst.graph, {0, 1}, Toughness::zero(6), all), -1);
}

TEST(RhoSetTest, RefinedEdgeWeight) {
  // i = 1: vertex weight 7, edge weight 5.
  EXPECT_EQ(rho_set(Multigraph(2, {{0, 1}, {0, 1}}), {1, 2}, Toughness::refined_zero(2),
                    std::vector<Vertex>{0, 1}),
            4);
}

TEST(RhoSetTest, ModularOverDisconnectedParts) {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t na = 1 + rng() % 4;
    const std::size_t nb = 1 + rng() % 4;
    const Multigraph a = oracle::random_multigraph(rng, na, rng() % 6);
    const Multigraph b = oracle::random_multigraph(rng, nb, rng() % 6);
    std::vector<Edge> edges = a.edges();
    for (Edge e : b.edges()) edges.push_back({e.u + static_cast<Vertex>(na), e.v + static_cast<Vertex>(na)});
    const Multigraph g(na + nb, edges);
    std::vector<Vertex> sa, sb, both;
    for (Vertex v = 0; v < na + nb; ++v) {
      if (rng() % 2 == 0) continue;
      (v < na ? sa : sb).push_back(v);
      both.push_back(v);
    }
    for (const DefectParams p : {DefectParams(0, 2), DefectParams(1, 4), DefectParams(3, 6)}) {
      const Toughness t = Toughness::zero(na + nb);
      EXPECT_EQ(rho_set(g, p, t, both), rho_set(g, p, t, sa) + rho_set(g, p, t, sb));
    }
  }
}

TEST(RhoGraphTest, SingleVertex) {
  const auto result = rho_graph(Multigraph(1), {1, 3}, Toughness::zero(1));
  EXPECT_EQ(result.value, 3);
  EXPECT_EQ(result.argmin, std::vector<Vertex>{0});
}

TEST(RhoGraphTest, ZeroJFamilyMinimumIsWholeGraph) {
  const auto inst = build_zeroj(1, 2);
  const auto result = rho_graph(inst.graph, {0, 1}, Toughness::zero(6));
  EXPECT_EQ(result.value, -1);
  EXPECT_EQ(result.argmin, (std::vector<Vertex>{0, 1, 2, 3, 4, 5}));
}

TEST(RhoGraphTest, RejectsEqualRegime) {
  const auto inst = build_equal(1, 2);
  EXPECT_THROW(rho_graph(inst.graph, {1, 1}, Toughness::zero(6)), std::invalid_argument);
}

TEST(RhoGraphTest, ArgminIsLexicographicallyFirst) {
  // {0,1}, {2,3} and {0,1,2,3} all reach 0; {0,1} is a prefix of the union.
  const auto result = rho_graph(Multigraph(4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}}), {0, 1},
                                Toughness::zero(4));
  EXPECT_EQ(result.value, 0);
  EXPECT_EQ(result.argmin, (std::vector<Vertex>{0, 1}));

  const auto tie = rho_graph(Multigraph(3), {0, 1}, Toughness::zero(3));
  EXPECT_EQ(tie.value, 1);
  EXPECT_EQ(tie.argmin, std::vector<Vertex>{0});
}

TEST(RhoGraphTest, AgreesWithBruteForceAndThreadCount) {
  std::mt19937_64 rng(505);
  Limits many;
  many.threads = 4;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 14;
    const Multigraph g = oracle::random_multigraph(rng, n, rng() % 20);
    const DefectParams p(1, 3);
    const Toughness t = Toughness::zero(n);
    Potential best = 1 << 30;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<Vertex> s;
      for (Vertex v = 0; v < n; ++v) {
        if ((mask >> v) & 1U) s.push_back(v);
      }
      best = std::min(best, rho_set(g, p, t, s));
    }
    const auto one = rho_graph(g, p, t);
    EXPECT_EQ(one.value, best);
    EXPECT_EQ(rho_set(g, p, t, one.argmin), best);
    const auto par = rho_graph(g, p, t, many);
    EXPECT_EQ(par.value, one.value);
    EXPECT_EQ(par.argmin, one.argmin);
  }
}

TEST(EdgeBoundTest, ClosedForms) {
  EXPECT_TRUE(edge_bound({0, 1}, 2).tight_at(3));
  EXPECT_EQ(edge_bound({1, 1}, 6).ceil(), 8);
  EXPECT_TRUE(edge_bound({1, 1}, 6).tight_at(8));
  const EdgeBound ip = edge_bound({1, 2}, 12);
  EXPECT_EQ(ip.numerator, 85);
  EXPECT_EQ(ip.denominator, 5);
  EXPECT_TRUE(ip.tight_at(17));
  EXPECT_TRUE(edge_bound({1, 3}, 7).tight_at(11));
  EXPECT_EQ(edge_bound({2, 4}, 11).numerator, 90);
  EXPECT_THROW(edge_bound({0, 0}, 3), std::invalid_argument);
  EXPECT_EQ(edge_bound({1, 1}, 2).ceil(), 3);  // 8/3 rounds up
}

TEST(PotentialThresholdTest, Values) {
  EXPECT_EQ(potential_threshold({0, 1}), -1);
  EXPECT_EQ(potential_threshold({1, 3}), -1);
  EXPECT_EQ(potential_threshold({2, 4}), -2);
  EXPECT_EQ(potential_threshold({1, 2}), -1);
}

}  // namespace
}  // namespace dpc
