// Copyright 2026 The matchaug Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "matchaug/algorithms.h"
#include "matchaug/demand_sources.h"
#include "matchaug/epl.h"
#include "matchaug/exact.h"
#include "matchaug/lambert_w.h"
#include "matchaug/topology.h"
#include "test_support.h"

namespace matchaug {
namespace {

DemandMatrix Demand(int n, std::vector<WeightedPair> pairs) {
  return DemandMatrix::FromPairs(n, pairs);
}

bool Contains(const Matching& m, NodeId u, NodeId v) {
  for (const NodePair& e : m.edges()) {
    if (e == NodePair(u, v)) return true;
  }
  return false;
}

TEST(AlgorithmNamesTest, RoundTrip) {
  for (Algorithm a : AllAlgorithms()) {
    EXPECT_EQ(ParseAlgorithm(AlgorithmName(a)), a);
  }
  EXPECT_EQ(ParseAlgorithm("mod"), Algorithm::kMatchingOnDemand);
  EXPECT_THROW(ParseAlgorithm("random"), ValidationError);
}

TEST(AlgorithmsTest, PerfectMonotoneAndDeterministic) {
  Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 8 + 2 * static_cast<int>(rng.UniformBelow(40));
    const Graph g = testing::RandomConnectedGraph(n, n / 4, rng);
    const DemandMatrix d = trial % 2 == 0
                               ? SparseRandomDemand(n, 0.8, 100, trial)
                               : ZipfDemand(n, 2.0, trial);
    const double baseline = Epl(g, d);
    AlgorithmOptions options;
    options.alpha = 3 + trial % 5;
    for (Algorithm a : AllAlgorithms()) {
      const AlgorithmResult r = RunAlgorithm(a, g, d, options);
      EXPECT_TRUE(ValidateMatching(r.matching, n, true).ok())
          << AlgorithmName(a) << " n=" << n;
      EXPECT_LE(Epl(Augment(g, r.matching), d), baseline + 1e-12);
      const AlgorithmResult again = RunAlgorithm(a, g, d, options);
      EXPECT_EQ(again.matching.edges().size(), r.matching.edges().size());
      EXPECT_TRUE(std::equal(r.matching.edges().begin(), r.matching.edges().end(),
                             again.matching.edges().begin()));
      EXPECT_EQ(again.trace.ToString(), r.trace.ToString());
    }
  }
}

TEST(AlgorithmsTest, RejectOddNodeCount) {
  Rng rng(1);
  const Graph g = testing::RandomConnectedGraph(5, 0, rng);
  const DemandMatrix d = Demand(5, {{0, 1, 1}});
  EXPECT_THROW(Greedy(g, d), ValidationError);
  EXPECT_THROW(SpiderDan(g, d), ValidationError);
}

TEST(AlgorithmsTest, NeverWorseThanOracleOnSmallInstances) {
  for (int n : {6, 8}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Graph g = Ring(n);
      const DemandMatrix d = SparseRandomDemand(n, 0.5, 100, seed);
      const double best = EnumerateOptimal(g, d).epl;
      for (Algorithm a : AllAlgorithms()) {
        if (a == Algorithm::kSuperChord && n < 8) continue;
        AlgorithmOptions options;
        options.alpha = 3;
        const AlgorithmResult r = RunAlgorithm(a, g, d, options);
        EXPECT_LE(best, Epl(Augment(g, r.matching), d) + 1e-12);
      }
    }
  }
}

TEST(SpiderDanTest, RingOfFourteenWithAlphaThree) {
  const int n = 14;
  const DemandMatrix d = SparseRandomDemand(n, 0.5, 100, 3);
  AlgorithmOptions options;
  options.alpha = 3;
  const AlgorithmResult r = SpiderDan(Ring(n), d, options);
  EXPECT_EQ(r.trace.groups, 4);
  EXPECT_EQ(r.trace.leftover, 2);
  ASSERT_TRUE(r.grouping.has_value());
  EXPECT_EQ(r.grouping->leftover.size(), 2u);
}

TEST(SpiderDanTest, IntraGroupDemandIsCompletedOnly) {
  // Ring(12), alpha 6: groups {11..6} and {5..0}; demand stays inside them.
  const DemandMatrix d = Demand(12, {{0, 3, 1}, {7, 10, 2}});
  AlgorithmOptions options;
  options.alpha = 6;
  const Graph g = Ring(12);
  const AlgorithmResult r = SpiderDan(g, d, options);
  EXPECT_EQ(r.trace.dan_edges, 0);
  EXPECT_TRUE(ValidateMatching(r.matching, 12, true).ok());
  EXPECT_LE(Epl(Augment(g, r.matching), d), Epl(g, d));
  // The restricted demand matching picks both pairs.
  EXPECT_TRUE(Contains(r.matching, 0, 3));
  EXPECT_TRUE(Contains(r.matching, 7, 10));
}

TEST(SpiderDanTest, AntipodalPairOnRingOfTwentyFour) {
  const Graph g = Ring(24);
  const DemandMatrix d = Demand(24, {{0, 12, 1}});
  const AlgorithmResult r = SpiderDan(g, d);
  ASSERT_TRUE(r.grouping.has_value());
  EXPECT_EQ(r.grouping->num_groups(), 2);
  EXPECT_EQ(r.trace.dan_edges, 1);
  EXPECT_EQ(r.trace.dan_realized, 1);
  bool joins = false;
  for (const NodePair& e : r.matching.edges()) {
    joins |= r.grouping->group_of[e.u] != r.grouping->group_of[e.v];
  }
  EXPECT_TRUE(joins);
  const Graph h = Augment(g, r.matching);
  const double epl = Epl(h, d);
  EXPECT_NEAR(epl, testing::ReferenceEpl(h, d), 1e-12);
  EXPECT_LE(epl, 25.0 * r.trace.dan_epl);
  EXPECT_DOUBLE_EQ(epl, 1.0);  // the demand pair itself is the best member pair
}

TEST(SpiderDanTest, AvoidsInfrastructureEdgesWhenPossible) {
  // Path-like DFS on ring(8), alpha 4: groups {7,6,5,4} and {3,2,1,0}. The
  // heaviest cross pair (3,4) is a ring edge; (0,5) realizes the DAN edge.
  const Graph g = Ring(8);
  const DemandMatrix d = Demand(8, {{3, 4, 10}, {0, 5, 1}});
  AlgorithmOptions options;
  options.alpha = 4;
  const AlgorithmResult r = SpiderDan(g, d, options);
  EXPECT_EQ(r.trace.dan_realized, 1);
  ASSERT_FALSE(r.matching.empty());
  EXPECT_EQ(r.matching.edges()[0], NodePair(0, 5));
}

TEST(SpiderDanTest, DanDegreeNeverExceedsAlpha) {
  const int n = 240;
  const DemandMatrix d = SparseRandomDemand(n, 0.5, 100, 2);
  for (int alpha : {3, 6, 12}) {
    AlgorithmOptions options;
    options.alpha = alpha;
    const AlgorithmResult r = SpiderDan(Ring(n), d, options);
    EXPECT_LE(r.trace.delta_cap, std::max(3, alpha));
    if (alpha >= 3) EXPECT_EQ(r.trace.dan_unrealized, 0);
    EXPECT_LE(r.trace.dan_lower_bound, r.trace.dan_epl + 1e-12);
  }
}

TEST(GreedyTest, RingOfFour) {
  const Graph g = Ring(4);
  const DemandMatrix d = Demand(4, {{0, 2, 0.5}});
  const AlgorithmResult r = Greedy(g, d);
  EXPECT_TRUE(Contains(r.matching, 0, 2));
  EXPECT_TRUE(Contains(r.matching, 1, 3));
  EXPECT_DOUBLE_EQ(Epl(Augment(g, r.matching), d), 1.0);
}

TEST(GreedyTest, HandSimulatedOrder) {
  const DemandMatrix d = Demand(6, {{0, 3, 0.3}, {3, 5, 0.2}, {1, 4, 0.1}});
  const AlgorithmResult r = Greedy(Ring(6), d);
  EXPECT_EQ(r.matching.edges().size(), 3u);
  EXPECT_EQ(r.matching.edges()[0], NodePair(0, 3));
  EXPECT_EQ(r.matching.edges()[1], NodePair(1, 4));
  EXPECT_EQ(r.matching.edges()[2], NodePair(2, 5));
  EXPECT_EQ(r.trace.demand_matched, 2);
  EXPECT_EQ(r.trace.completion_by_id, 1);
}

TEST(GreedyTest, EqualDemandsResolvedByPairOrder) {
  const DemandMatrix d = Demand(8, {{2, 6, 1}, {0, 4, 1}, {1, 5, 1}, {0, 5, 1}});
  const AlgorithmResult r = Greedy(Ring(8), d);
  EXPECT_EQ(r.matching.edges()[0], NodePair(0, 4));
  EXPECT_EQ(r.matching.edges()[1], NodePair(1, 5));
  EXPECT_EQ(r.matching.edges()[2], NodePair(2, 6));
}

TEST(GreedyTest, NoZeroDemandEdgeBeforeCompletion) {
  const Graph g = Ring(30);
  const DemandMatrix d = SparseRandomDemand(30, 0.95, 100, 4);
  const AlgorithmResult r = Greedy(g, d);
  for (int i = 0; i < r.trace.demand_matched; ++i) {
    const NodePair e = r.matching.edges()[i];
    EXPECT_GT(d.at(e.u, e.v), 0.0);
    EXPECT_FALSE(g.HasEdge(e.u, e.v));
  }
}

TEST(GreedyTest, DemandPhaseIsRelabelingEquivariant) {
  Rng rng(6);
  const int n = 16;
  const Graph g = testing::RandomConnectedGraph(n, 4, rng);
  std::vector<WeightedPair> pairs;
  std::set<NodePair> used;
  for (int k = 0; k < 30; ++k) {
    const NodeId u = static_cast<NodeId>(rng.UniformBelow(n));
    const NodeId v = static_cast<NodeId>(rng.UniformBelow(n));
    if (u != v && used.insert(NodePair(u, v)).second) {
      pairs.push_back({u, v, 1.0 + k});
    }
  }
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.UniformBelow(i + 1)]);
  std::vector<NodePair> edges;
  for (const NodePair& e : g.Edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  std::vector<WeightedPair> moved;
  for (const auto& p : pairs) moved.push_back({perm[p.u], perm[p.v], p.weight});

  const AlgorithmResult a = Greedy(g, DemandMatrix::FromPairs(n, pairs));
  const AlgorithmResult b =
      Greedy(Graph::FromEdges(n, edges), DemandMatrix::FromPairs(n, moved));
  ASSERT_EQ(a.trace.demand_matched, b.trace.demand_matched);
  std::set<NodePair> mapped, direct;
  for (int i = 0; i < a.trace.demand_matched; ++i) {
    const NodePair e = a.matching.edges()[i];
    mapped.insert(NodePair(perm[e.u], perm[e.v]));
    direct.insert(b.matching.edges()[i]);
  }
  EXPECT_EQ(mapped, direct);
}

TEST(MatchingOnDemandTest, PathPrefersOuterPairs) {
  // Demand path 0-2-4-6 on ring(8) with weights 5, 6, 5.
  const DemandMatrix d = Demand(8, {{0, 2, 5}, {2, 4, 6}, {4, 6, 5}});
  const AlgorithmResult r = MatchingOnDemand(Ring(8), d);
  EXPECT_TRUE(Contains(r.matching, 0, 2));
  EXPECT_TRUE(Contains(r.matching, 4, 6));
  EXPECT_EQ(r.trace.demand_matched, 2);
}

TEST(MatchingOnDemandTest, TriangleTakesHeaviestPair) {
  const DemandMatrix d = Demand(6, {{0, 2, 3}, {2, 4, 2}, {0, 4, 2}});
  const AlgorithmResult r = MatchingOnDemand(Ring(6), d);
  EXPECT_TRUE(Contains(r.matching, 0, 2));
  EXPECT_EQ(r.trace.demand_matched, 1);
}

TEST(MatchingOnDemandTest, EmptyDemandGraphIsCompletionOnly) {
  const DemandMatrix d = Demand(6, {{0, 1, 1}, {2, 3, 1}});
  const AlgorithmResult r = MatchingOnDemand(Ring(6), d);
  EXPECT_EQ(r.trace.demand_edges, 0);
  EXPECT_EQ(r.matching.Sorted(), (std::vector<NodePair>{{0, 1}, {2, 3}, {4, 5}}));
}

TEST(MatchingOnDemandTest, PerfectDemandMatchingReturnedVerbatim) {
  const DemandMatrix d = Demand(6, {{0, 3, 1}, {1, 4, 2}, {2, 5, 3}});
  const AlgorithmResult r = MatchingOnDemand(Ring(6), d);
  EXPECT_EQ(r.matching.Sorted(), (std::vector<NodePair>{{0, 3}, {1, 4}, {2, 5}}));
  EXPECT_EQ(r.trace.completion_by_id, 0);
}

TEST(MatchingOnDemandTest, DemandWeightIsMaximum) {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 * (3 + static_cast<int>(rng.UniformBelow(3)));
    const Graph g = Ring(n);
    std::vector<WeightedPair> pairs;
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        if (rng.Uniform01() < 0.5) {
          pairs.push_back({u, v, 1.0 + static_cast<double>(rng.UniformBelow(9))});
        }
      }
    }
    if (pairs.empty()) continue;
    const DemandMatrix d = DemandMatrix::FromPairs(n, pairs);
    const AlgorithmResult r = MatchingOnDemand(g, d);
    std::vector<WeightedPair> dg;
    for (const auto& p : pairs) {
      if (!g.HasEdge(p.u, p.v)) dg.push_back(p);
    }
    double got = 0;
    for (const NodePair& e : r.matching.edges()) {
      for (const auto& p : dg) {
        if (NodePair(p.u, p.v) == e) got += p.weight;
      }
    }
    EXPECT_EQ(got, testing::BruteMaxMatchingWeight(n, dg));
  }
}

TEST(SuperChordTest, RingOf4096) {
  const Graph g = Ring(4096);
  const AlgorithmResult r = SuperChord(g);
  EXPECT_EQ(r.trace.blocks, 256);
  EXPECT_EQ(r.trace.fingers_total, 256 * 8);
  EXPECT_EQ(r.trace.fingers_total, r.trace.fingers_realized +
                                       r.trace.fingers_dropped +
                                       r.trace.fingers_duplicate);
  EXPECT_TRUE(ValidateMatching(r.matching, 4096, true).ok());
  EXPECT_LE(Diameter(Augment(g, r.matching)), 48);
}

TEST(SuperChordTest, BlocksAreConsecutiveAndEven) {
  // n = 10: N = 4 blocks of sizes 3, 3, 2, 2 starting at 0, 3, 6, 8.
  const AlgorithmResult r = SuperChord(Ring(10));
  EXPECT_EQ(r.trace.blocks, 4);
  EXPECT_EQ(r.matching.edges()[0], NodePair(0, 3));
  EXPECT_TRUE(ValidateMatching(r.matching, 10, true).ok());
}

TEST(SuperChordTest, RejectsTinyRings) {
  EXPECT_THROW(SuperChord(Ring(6)), ValidationError);
}

TEST(CompleteByIdTest, PairsInOrder) {
  std::vector<NodeId> mate = {kNoNode, 3, kNoNode, 1, kNoNode, kNoNode};
  Matching m;
  EXPECT_EQ(CompleteById(mate, m), 2);
  EXPECT_EQ(m.Sorted(), (std::vector<NodePair>{{0, 2}, {4, 5}}));
}

}  // namespace
}  // namespace matchaug
