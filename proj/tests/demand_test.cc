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

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "matchaug/demand.h"
#include "matchaug/demand_sources.h"
#include "matchaug/topology.h"
#include "test_support.h"

namespace matchaug {
namespace {

void ExpectValidDemand(const SymmetricMatrix& d) {
  double total = 0.0;
  for (NodeId u = 0; u < d.num_nodes(); ++u) {
    for (const auto& e : d.row(u)) {
      EXPECT_NE(e.partner, u);
      EXPECT_GT(e.value, 0.0);
      EXPECT_EQ(d.at(e.partner, u), e.value);
      total += e.value;
    }
  }
  EXPECT_NEAR(total, 1.0, 1e-9);
}

TEST(NormalizeDemandTest, UniformScaling) {
  const std::vector<DemandTriplet> raw = {{0, 1, 1}, {1, 0, 1}, {2, 3, 1}, {3, 2, 1}};
  const DemandMatrix d = NormalizeDemand(4, raw);
  EXPECT_DOUBLE_EQ(d.at(0, 1), 0.25);
  EXPECT_DOUBLE_EQ(d.at(3, 2), 0.25);
  EXPECT_NEAR(d.ordered_sum(), 1.0, 1e-12);
}

TEST(NormalizeDemandTest, HandComputedRatios) {
  const std::vector<DemandTriplet> raw = {{0, 1, 3}, {1, 0, 3}, {0, 2, 1}, {2, 0, 1}};
  const DemandMatrix d = NormalizeDemand(3, raw);
  EXPECT_DOUBLE_EQ(d.at(0, 1), 0.375);
  EXPECT_DOUBLE_EQ(d.at(2, 0), 0.125);
}

TEST(NormalizeDemandTest, Idempotent) {
  const DemandMatrix d = SparseRandomDemand(16, 0.5, 100, 4);
  const DemandMatrix again = NormalizeDemand(d);
  for (const auto& p : d.Pairs()) EXPECT_NEAR(again.at(p.u, p.v), p.weight, 1e-12);
}

TEST(NormalizeDemandTest, ErrorsNameTheOffendingPair) {
  const auto expect_pair = [](std::vector<DemandTriplet> raw, NodePair want) {
    try {
      NormalizeDemand(4, raw);
      FAIL() << "expected ValidationError";
    } catch (const ValidationError& e) {
      ASSERT_TRUE(e.has_pair()) << e.what();
      EXPECT_EQ(e.pair(), want);
    }
  };
  expect_pair({{0, 1, 1}, {1, 0, 2}}, NodePair(0, 1));       // asymmetric
  expect_pair({{0, 2, -1}, {2, 0, -1}}, NodePair(0, 2));     // negative
  expect_pair({{3, 3, 1}}, NodePair(3, 3));                  // diagonal
  expect_pair({{1, 2, 1}}, NodePair(1, 2));                  // missing mirror
  EXPECT_THROW(NormalizeDemand(4, std::vector<DemandTriplet>{{0, 1, 0}, {1, 0, 0}}),
               ValidationError);                              // all zero
}

TEST(ZipfDemandTest, RankOneMassForFourNodes) {
  const DemandMatrix d = ZipfDemand(4, 1.0, 7);
  std::vector<double> masses;
  for (const auto& p : d.Pairs()) masses.push_back(2.0 * p.weight);
  std::sort(masses.rbegin(), masses.rend());
  ASSERT_EQ(masses.size(), 6u);
  const double h = 1 + 1.0 / 2 + 1.0 / 3 + 1.0 / 4 + 1.0 / 5 + 1.0 / 6;
  EXPECT_NEAR(masses[0], 1 / h, 1e-12);
  EXPECT_NEAR(masses[0], 0.40816, 1e-5);
  for (int x = 1; x <= 6; ++x) EXPECT_NEAR(masses[x - 1], 1.0 / (x * h), 1e-12);
}

TEST(ZipfDemandTest, SortedValuesFollowThePmfForAnySeed) {
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    const int n = 10;
    const double zeta = 2.5;
    const DemandMatrix d = ZipfDemand(n, zeta, seed);
    std::vector<double> masses;
    for (const auto& p : d.Pairs()) masses.push_back(2.0 * p.weight);
    std::sort(masses.rbegin(), masses.rend());
    const int pairs = n * (n - 1) / 2;
    double h = 0;
    for (int i = 1; i <= pairs; ++i) h += std::pow(i, -zeta);
    ASSERT_EQ(static_cast<int>(masses.size()), pairs);
    for (int x = 1; x <= pairs; ++x) {
      EXPECT_NEAR(masses[x - 1], std::pow(x, -zeta) / h, 1e-12);
    }
  }
}

TEST(ZipfDemandTest, LargeZetaConcentratesOnOnePair) {
  const DemandMatrix d = ZipfDemand(4, 60.0, 3);
  double top = 0;
  for (const auto& p : d.Pairs()) top = std::max(top, 2 * p.weight);
  EXPECT_GT(top, 1 - 1e-12);
}

TEST(ZipfDemandTest, NormalizedDeterministicAndSeedSensitive) {
  const DemandMatrix a = ZipfDemand(64, 2.0, 5);
  ExpectValidDemand(a);
  const DemandMatrix b = ZipfDemand(64, 2.0, 5);
  const DemandMatrix c = ZipfDemand(64, 2.0, 6);
  const auto pa = a.Pairs(), pb = b.Pairs(), pc = c.Pairs();
  ASSERT_EQ(pa.size(), pb.size());
  bool differs = false;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    EXPECT_EQ(pa[i].weight, pb[i].weight);
    differs |= pa[i].weight != pc[i].weight;
  }
  EXPECT_TRUE(differs);
}

TEST(ZipfDemandTest, RejectsNonPositiveZeta) {
  EXPECT_THROW(ZipfDemand(8, 0.0, 1), ValidationError);
  EXPECT_THROW(ZipfDemand(8, -1.0, 1), ValidationError);
}

TEST(SparseRandomTest, GammaZeroIsUniformComplete) {
  const int n = 12;
  const DemandMatrix d = SparseRandomDemand(n, 0.0, 100, 1);
  EXPECT_EQ(d.num_pairs(), static_cast<std::size_t>(n * (n - 1) / 2));
  for (const auto& p : d.Pairs()) EXPECT_NEAR(p.weight, 1.0 / (n * (n - 1)), 1e-15);
}

TEST(SparseRandomTest, NonzeroCountMatchesBinomialExpectation) {
  double total = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const DemandMatrix d = SparseRandomDemand(64, 0.9, 100, seed);
    total += static_cast<double>(d.num_pairs());
  }
  const double mean = total / 1000;
  EXPECT_NEAR(mean, 201.6, 0.05 * 201.6);
}

TEST(SparseRandomTest, NormalizedAndDeterministic) {
  const DemandMatrix a = SparseRandomDemand(32, 0.7, 100, 9);
  ExpectValidDemand(a);
  const DemandMatrix b = SparseRandomDemand(32, 0.7, 100, 9);
  EXPECT_EQ(a.Pairs().size(), b.Pairs().size());
  for (std::size_t i = 0; i < a.Pairs().size(); ++i) {
    EXPECT_EQ(a.Pairs()[i].u, b.Pairs()[i].u);
    EXPECT_EQ(a.Pairs()[i].v, b.Pairs()[i].v);
  }
}

TEST(SparseRandomTest, RedrawsAllZeroOutcome) {
  // With n = 4 and gamma = 0.99 most draws are empty; the result never is.
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    EXPECT_FALSE(SparseRandomDemand(4, 0.99, 100, seed).empty());
  }
}

TEST(SparseRandomTest, RejectsGammaOutOfRange) {
  EXPECT_THROW(SparseRandomDemand(8, 1.0, 100, 1), ValidationError);
  EXPECT_THROW(SparseRandomDemand(8, -0.1, 100, 1), ValidationError);
}

TEST(PairListTest, AccumulatesBothDirections) {
  std::istringstream in("a,b,3\nb,a,1\n");
  const TraceDemand t = ReadPairList(in, "t");
  EXPECT_EQ(t.demand.num_nodes(), 2);
  EXPECT_EQ(t.padding_nodes, 0);
  EXPECT_DOUBLE_EQ(t.demand.at(0, 1), 0.5);
  EXPECT_EQ(t.labels, (std::vector<std::string>{"a", "b"}));
}

TEST(PairListTest, ThreeRacksArePadded) {
  std::istringstream in("a b 2\nb c 2\n");
  const TraceDemand t = ReadPairList(in, "t");
  EXPECT_EQ(t.demand.num_nodes(), 4);
  EXPECT_EQ(t.padding_nodes, 1);
  EXPECT_EQ(t.labels.back(), "<pad>");
  EXPECT_DOUBLE_EQ(t.demand.at(0, 1), 0.25);
  EXPECT_DOUBLE_EQ(t.demand.at(1, 2), 0.25);
  EXPECT_DOUBLE_EQ(t.demand.marginal(3), 0.0);
}

TEST(PairListTest, Errors) {
  std::istringstream empty("");
  EXPECT_THROW(ReadPairList(empty, "t"), ParseError);
  std::istringstream negative("a,b,-1\n");
  EXPECT_THROW(ReadPairList(negative, "t"), Error);
  std::istringstream malformed("a,b,1\na,b\n");
  try {
    ReadPairList(malformed, "t");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(MatrixMarketTest, SymmetricTwoByTwo) {
  std::istringstream in(
      "%%MatrixMarket matrix coordinate real symmetric\n% c\n2 2 1\n2 1 5\n");
  const TraceDemand t = ReadMatrixMarket(in, "m");
  EXPECT_DOUBLE_EQ(t.demand.at(0, 1), 0.5);
}

TEST(MatrixMarketTest, PatternMeansUnitWeights) {
  std::istringstream in(
      "%%MatrixMarket matrix coordinate pattern symmetric\n4 4 3\n2 1\n3 1\n4 3\n");
  const TraceDemand t = ReadMatrixMarket(in, "m");
  EXPECT_DOUBLE_EQ(t.demand.at(0, 1), 1.0 / 6);
  EXPECT_DOUBLE_EQ(t.demand.at(0, 2), 1.0 / 6);
  EXPECT_DOUBLE_EQ(t.demand.at(2, 3), 1.0 / 6);
}

TEST(MatrixMarketTest, DiagonalDroppedWithWarning) {
  std::istringstream in(
      "%%MatrixMarket matrix coordinate real symmetric\n2 2 2\n1 1 4\n2 1 1\n");
  const TraceDemand t = ReadMatrixMarket(in, "m");
  EXPECT_FALSE(t.warnings.empty());
  EXPECT_DOUBLE_EQ(t.demand.at(0, 1), 0.5);
}

TEST(MatrixMarketTest, GeneralMustBeSymmetric) {
  std::istringstream ok(
      "%%MatrixMarket matrix coordinate integer general\n2 2 2\n1 2 3\n2 1 3\n");
  EXPECT_DOUBLE_EQ(ReadMatrixMarket(ok, "m").demand.at(0, 1), 0.5);
  std::istringstream bad(
      "%%MatrixMarket matrix coordinate real general\n2 2 2\n1 2 3\n2 1 4\n");
  EXPECT_THROW(ReadMatrixMarket(bad, "m"), ValidationError);
}

TEST(MatrixMarketTest, OddRowCountIsPadded) {
  std::istringstream in(
      "%%MatrixMarket matrix coordinate real symmetric\n3 3 2\n2 1 1\n3 2 1\n");
  const TraceDemand t = ReadMatrixMarket(in, "m");
  EXPECT_EQ(t.demand.num_nodes(), 4);
  EXPECT_EQ(t.padding_nodes, 1);
}

TEST(MatrixMarketTest, Errors) {
  std::istringstream banner("%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n4\n");
  EXPECT_THROW(ReadMatrixMarket(banner, "m"), ParseError);
  std::istringstream nonpositive(
      "%%MatrixMarket matrix coordinate real symmetric\n2 2 1\n2 1 0\n");
  EXPECT_THROW(ReadMatrixMarket(nonpositive, "m"), Error);
  std::istringstream count(
      "%%MatrixMarket matrix coordinate real symmetric\n2 2 2\n2 1 1\n");
  EXPECT_THROW(ReadMatrixMarket(count, "m"), ParseError);
}

TEST(MatrixMarketTest, WriteThenReadPreservesValues) {
  const DemandMatrix d = SparseRandomDemand(10, 0.5, 100, 2);
  std::ostringstream out;
  WriteMatrixMarket(out, d);
  std::istringstream in(out.str());
  const DemandMatrix once = ReadMatrixMarket(in, "m").demand;
  for (const auto& p : d.Pairs()) EXPECT_NEAR(once.at(p.u, p.v), p.weight, 1e-15);
}

TEST(DemandGraphTest, InfrastructureEdgesExcluded) {
  const DemandMatrix d = DemandMatrix::FromPairs(4, std::vector<WeightedPair>{{0, 1, 1}, {0, 2, 1}});
  const DemandGraph dg = BuildDemandGraph(Ring(4), d);
  ASSERT_EQ(dg.edges.size(), 1u);
  EXPECT_EQ(dg.edges[0].u, 0);
  EXPECT_EQ(dg.edges[0].v, 2);
  EXPECT_DOUBLE_EQ(dg.edges[0].weight, d.at(0, 2));
}

TEST(DemandGraphTest, DemandOnInfrastructureOnly) {
  const DemandMatrix d = DemandMatrix::FromPairs(4, std::vector<WeightedPair>{{0, 1, 1}, {2, 3, 1}});
  const DemandGraph dg = BuildDemandGraph(Ring(4), d);
  EXPECT_TRUE(dg.edges.empty());
  EXPECT_EQ(dg.average_degree, 0.0);
}

TEST(DemandGraphTest, AntipodalRingOfSix) {
  const DemandMatrix d = DemandMatrix::FromPairs(
      6, std::vector<WeightedPair>{{0, 3, 1}, {1, 4, 1}, {2, 5, 1}});
  const DemandGraph dg = BuildDemandGraph(Ring(6), d);
  EXPECT_EQ(dg.edges.size(), 3u);
  EXPECT_DOUBLE_EQ(dg.average_degree, 1.0);
}

}  // namespace
}  // namespace matchaug
