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

#ifndef MATCHAUG_DEMAND_SOURCES_H_
#define MATCHAUG_DEMAND_SOURCES_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "matchaug/demand.h"
#include "matchaug/graph.h"

namespace matchaug {

// Zipf-ranked demand. The n(n-1)/2 unordered pairs receive ranks 1..P by a
// uniform random permutation drawn from seed; the pair of rank x gets mass
// f(x) = 1 / (x^zeta * sum_{i=1..P} i^-zeta), split evenly over its two
// directions. Requires even n >= 2 and zeta > 0.
DemandMatrix ZipfDemand(int n, double zeta, std::uint64_t seed);

// Each unordered pair independently gets raw value `high` with probability
// 1 - gamma, otherwise 0, then the matrix is normalized. Pairs are drawn in
// ascending (u, v) order; an all-zero draw is redrawn from the continuing
// stream. Requires even n >= 2 and 0 <= gamma < 1.
DemandMatrix SparseRandomDemand(int n, double gamma, double high,
                                std::uint64_t seed);

inline constexpr double kDefaultSparseHigh = 100.0;

// A demand read from a trace file.
struct TraceDemand {
  DemandMatrix demand;
  // Label of each dense node id. A padding node, if any, is labeled
  // "<pad>".
  std::vector<std::string> labels;
  // 1 when an isolated node was appended to make the node count even.
  int padding_nodes = 0;
  std::vector<std::string> warnings;
};

// Pair list: one "u,v,frequency" per line, separated by commas or
// whitespace (decided per line). Ids are arbitrary strings mapped to dense
// ids in order of first appearance. Duplicate and reversed pairs are summed.
// '#' starts a comment line. Self pairs are dropped with a warning.
TraceDemand LoadPairList(const std::string& path);
TraceDemand ReadPairList(std::istream& in, const std::string& source);

// MatrixMarket coordinate file with real, integer or pattern field and
// symmetric or general symmetry. Pattern entries weigh 1. General files
// must be exactly symmetric. Diagonal entries are dropped with a warning;
// non-positive values are errors.
TraceDemand LoadMatrixMarket(const std::string& path);
TraceDemand ReadMatrixMarket(std::istream& in, const std::string& source);

// Writes "coordinate real symmetric", lower triangle, 1-based.
void WriteMatrixMarket(std::ostream& out, const SymmetricMatrix& d);
void SaveMatrixMarket(const std::string& path, const SymmetricMatrix& d);

// Demand pairs that are not infrastructure edges, with their values.
struct DemandGraph {
  int num_nodes = 0;
  std::vector<WeightedPair> edges;  // ascending (u, v)
  double average_degree = 0.0;      // 2 |edges| / n
};

DemandGraph BuildDemandGraph(const Graph& g, const SymmetricMatrix& d);

}  // namespace matchaug

#endif  // MATCHAUG_DEMAND_SOURCES_H_
