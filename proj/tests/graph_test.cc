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

#include <sstream>

#include "matchaug/epl.h"
#include "matchaug/graph.h"
#include "matchaug/io.h"
#include "matchaug/matching.h"
#include "matchaug/topology.h"
#include "test_support.h"

namespace matchaug {
namespace {

using testing::FloydDistances;
using testing::ReferenceEpl;

Graph Complete(int n) {
  std::vector<NodePair> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::FromEdges(n, edges);
}

DemandMatrix PerDirection(int n, std::vector<WeightedPair> pairs) {
  return DemandMatrix::FromPairs(n, pairs);
}

TEST(GraphTest, FromEdgesMergesDuplicatesAndSortsNeighbors) {
  const std::vector<NodePair> edges = {{2, 0}, {0, 1}, {0, 2}, {1, 2}};
  const Graph g = Graph::FromEdges(3, edges);
  EXPECT_EQ(g.num_edges(), 3);
  ASSERT_EQ(g.degree(0), 2);
  EXPECT_EQ(g.neighbors(0)[0], 1);
  EXPECT_EQ(g.neighbors(0)[1], 2);
  EXPECT_TRUE(g.HasEdge(2, 1));
  EXPECT_FALSE(Graph::FromEdges(3, std::vector<NodePair>{{0, 1}}).HasEdge(1, 2));
  EXPECT_EQ(g.max_degree(), 2);
}

TEST(GraphTest, RejectsSelfLoopsAndOutOfRange) {
  EXPECT_THROW(Graph::FromEdges(3, std::vector<NodePair>{{1, 1}}),
               ValidationError);
  EXPECT_THROW(Graph::FromEdges(3, std::vector<NodePair>{{0, 3}}),
               ValidationError);
}

TEST(GraphTest, InfrastructureRequiresEvenAndConnected) {
  EXPECT_NO_THROW(RequireInfrastructure(Ring(6)));
  EXPECT_THROW(RequireInfrastructure(Complete(3)), ValidationError);
  EXPECT_THROW(RequireInfrastructure(
                   Graph::FromEdges(4, std::vector<NodePair>{{0, 1}, {2, 3}})),
               ValidationError);
}

TEST(EplTest, AntipodalRingPair) {
  const DemandMatrix d = PerDirection(6, {{0, 3, 0.5}});
  EXPECT_DOUBLE_EQ(Epl(Ring(6), d), 3.0);
}

TEST(EplTest, CompleteGraphIsOne) {
  const DemandMatrix d = PerDirection(4, {{0, 1, 1}, {1, 3, 2}, {0, 2, 5}});
  EXPECT_NEAR(Epl(Complete(4), d), 1.0, 1e-12);
}

TEST(EplTest, RingOfEightHandComputed) {
  const DemandMatrix d = PerDirection(8, {{0, 4, 0.25}, {1, 3, 0.25}});
  EXPECT_NEAR(Epl(Ring(8), d), 3.0, 1e-12);
}

TEST(EplTest, UnreachablePairNamesThePair) {
  const Graph g = Graph::FromEdges(4, std::vector<NodePair>{{0, 1}, {2, 3}});
  const DemandMatrix d = PerDirection(4, {{1, 2, 1.0}});
  try {
    Epl(g, d);
    FAIL() << "expected UnreachablePairError";
  } catch (const UnreachablePairError& e) {
    EXPECT_EQ(e.pair(), NodePair(1, 2));
  }
}

TEST(EplTest, MatchesFloydOracleAndThreadCountIsIrrelevant) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 4 + 2 * static_cast<int>(rng.UniformBelow(10));
    const Graph g = testing::RandomConnectedGraph(n, n / 2, rng);
    std::vector<WeightedPair> pairs;
    for (int k = 0; k < 2 * n; ++k) {
      const NodeId u = static_cast<NodeId>(rng.UniformBelow(n));
      const NodeId v = static_cast<NodeId>(rng.UniformBelow(n));
      if (u != v) pairs.push_back({u, v, 1.0 + rng.Uniform01()});
    }
    if (pairs.empty()) continue;
    const DemandMatrix d = DemandMatrix::FromPairs(n, pairs);
    const double one = Epl(g, d);
    EXPECT_NEAR(one, ReferenceEpl(g, d), 1e-12);
    EXPECT_EQ(one, Epl(g, d, 3));
  }
}

TEST(EplTest, InvariantUnderRelabeling) {
  Rng rng(11);
  const int n = 12;
  const Graph g = testing::RandomConnectedGraph(n, 6, rng);
  std::vector<WeightedPair> pairs = {{0, 5, 3}, {2, 9, 1}, {4, 11, 2}, {1, 7, 4}};
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.UniformBelow(i + 1)]);
  std::vector<NodePair> edges;
  for (const NodePair& e : g.Edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  std::vector<WeightedPair> relabeled;
  for (const auto& p : pairs) relabeled.push_back({perm[p.u], perm[p.v], p.weight});
  EXPECT_NEAR(Epl(g, DemandMatrix::FromPairs(n, pairs)),
              Epl(Graph::FromEdges(n, edges), DemandMatrix::FromPairs(n, relabeled)),
              1e-12);
}

TEST(EplTest, AtLeastOneAndOneExactlyWhenAllPairsAdjacent) {
  const Graph g = Ring(10);
  EXPECT_NEAR(Epl(g, PerDirection(10, {{0, 1, 1}, {4, 5, 2}})), 1.0, 1e-12);
  EXPECT_GT(Epl(g, PerDirection(10, {{0, 1, 1}, {4, 6, 2}})), 1.0);
}

TEST(AugmentTest, RingOfFourBecomesComplete) {
  const Graph h = Augment(Ring(4), Matching({{0, 2}, {1, 3}}));
  const auto dist = FloydDistances(h);
  for (int u = 0; u < 4; ++u) {
    for (int v = 0; v < 4; ++v) EXPECT_EQ(dist[u][v], u == v ? 0 : 1);
  }
}

TEST(AugmentTest, EmptyMatchingIsIdentity) {
  const Graph g = Ring(8);
  EXPECT_EQ(Augment(g, Matching()).Edges(), g.Edges());
}

TEST(AugmentTest, AntipodalRingOfSixHasDiameterTwo) {
  const Matching m({{0, 3}, {1, 4}, {2, 5}});
  EXPECT_EQ(Diameter(Augment(Ring(6), m)), 2);
  EXPECT_EQ(testing::Diameter(6, testing::WithMatching(Ring(6), m)), 2);
}

TEST(AugmentTest, InfrastructureDuplicatesAbsorbed) {
  const Graph g = Ring(6);
  const Matching m({{0, 1}, {2, 5}, {3, 4}});
  const Graph h = Augment(g, m);
  EXPECT_EQ(h.num_edges(), 7);
  EXPECT_EQ(EdgesAlreadyInGraph(g, m),
            (std::vector<NodePair>{{0, 1}, {3, 4}}));
}

TEST(AugmentTest, RejectsOutOfRangeEndpoint) {
  EXPECT_THROW(Augment(Ring(4), Matching({{0, 4}})), ValidationError);
}

TEST(AugmentTest, MonotoneOnRandomMatchings) {
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 6 + 2 * static_cast<int>(rng.UniformBelow(8));
    const Graph g = testing::RandomConnectedGraph(n, 2, rng);
    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.UniformBelow(i + 1)]);
    Matching m;
    for (int i = 0; i + 1 < n; i += 2) m.Add(perm[i], perm[i + 1]);
    std::vector<WeightedPair> pairs;
    for (int k = 0; k < n; ++k) {
      const NodeId u = static_cast<NodeId>(rng.UniformBelow(n));
      const NodeId v = static_cast<NodeId>(rng.UniformBelow(n));
      if (u != v) pairs.push_back({u, v, rng.Uniform01() + 0.1});
    }
    if (pairs.empty()) continue;
    const DemandMatrix d = DemandMatrix::FromPairs(n, pairs);
    EXPECT_LE(Epl(Augment(g, m), d), Epl(g, d) + 1e-12);
  }
}

TEST(ValidateMatchingTest, Examples) {
  EXPECT_TRUE(ValidateMatching(Matching({{0, 1}, {2, 3}}), 4, true).ok());

  const MatchingCheck over = ValidateMatching(Matching({{0, 1}, {1, 2}}), 4, false);
  ASSERT_EQ(over.violations.size(), 1u);
  EXPECT_EQ(over.violations[0],
            (MatchingViolation{MatchingViolation::Kind::kOverMatched, 1}));

  const MatchingCheck partial = ValidateMatching(Matching({{0, 1}}), 4, true);
  ASSERT_EQ(partial.violations.size(), 2u);
  EXPECT_EQ(partial.violations[0].node, 2);
  EXPECT_EQ(partial.violations[1].node, 3);
  EXPECT_EQ(partial.violations[0].kind, MatchingViolation::Kind::kUnmatched);

  EXPECT_FALSE(ValidateMatching(Matching({{0, 7}}), 4, false).ok());
}

TEST(IoTest, EdgeListRoundTripWithHeaderAndComments) {
  std::istringstream in("# n=6\n0 1\n# comment\n2,3  # trailing\n\n4 5\n");
  const EdgeList list = ReadEdgeList(in);
  EXPECT_EQ(list.num_nodes, 6);
  EXPECT_EQ(list.edges, (std::vector<NodePair>{{0, 1}, {2, 3}, {4, 5}}));
  std::ostringstream out;
  WriteEdgeList(out, list.num_nodes, list.edges);
  std::istringstream again(out.str());
  EXPECT_EQ(ReadEdgeList(again).edges, list.edges);
}

TEST(IoTest, EdgeListWithoutHeaderUsesMaxId) {
  std::istringstream in("0 1\n1 5\n");
  EXPECT_EQ(ReadEdgeList(in).num_nodes, 6);
}

TEST(IoTest, MalformedEdgeLineReportsLine) {
  std::istringstream in("0 1\n2 x\n");
  try {
    ReadEdgeList(in, "g.txt");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(IoTest, DemandTriplesRoundTrip) {
  const DemandMatrix d = PerDirection(6, {{0, 3, 3}, {1, 4, 1}, {2, 5, 0.25}});
  std::ostringstream out;
  WriteDemandTriples(out, d);
  std::istringstream in(out.str());
  const DemandMatrix back = ReadDemandTriples(in);
  EXPECT_EQ(back.num_nodes(), 6);
  for (const auto& p : d.Pairs()) EXPECT_NEAR(back.at(p.u, p.v), p.weight, 1e-15);
}

TEST(IoTest, MissingFileIsIoError) {
  EXPECT_THROW(ReadGraph("/nonexistent/graph.txt"), IoError);
}

}  // namespace
}  // namespace matchaug
