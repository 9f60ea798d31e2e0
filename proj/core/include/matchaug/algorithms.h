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


// Matching-construction algorithms. Every entry point returns a perfect
// matching on the graph's nodes.

#ifndef MATCHAUG_ALGORITHMS_H_
#define MATCHAUG_ALGORITHMS_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "matchaug/deadline.h"
#include "matchaug/demand.h"
#include "matchaug/graph.h"
#include "matchaug/matching.h"
#include "matchaug/supernode.h"

namespace matchaug {

enum class Algorithm { kSpiderDan, kGreedy, kMatchingOnDemand, kSuperChord };

// "spiderdan", "greedy", "mod", "superchord".
std::string_view AlgorithmName(Algorithm a);
Algorithm ParseAlgorithm(std::string_view name);
std::span<const Algorithm> AllAlgorithms();

struct AlgorithmOptions {
  int alpha = 12;
  // 0 selects the default DAN degree cap (see SpiderDan).
  int delta_cap = 0;
  Deadline deadline;
};

struct AlgorithmTrace {
  // spiderdan
  int groups = 0;
  int leftover = 0;
  int delta_cap = 0;
  int dan_edges = 0;
  int dan_realized = 0;
  int dan_unrealized = 0;
  int dan_deferred_partners = 0;
  int dan_repair_removed = 0;
  double dan_epl = 0.0;
  double dan_lower_bound = 0.0;
  // superchord
  int blocks = 0;
  int fingers_total = 0;
  int fingers_realized = 0;
  int fingers_dropped = 0;
  int fingers_duplicate = 0;
  // greedy, mod
  int demand_edges = 0;
  int demand_matched = 0;
  // completion
  int completion_demand = 0;
  int completion_by_id = 0;

  // One "key=value" per line, fixed order.
  std::string ToString() const;
};

struct AlgorithmResult {
  Matching matching;
  AlgorithmTrace trace;
  double runtime_ms = 0.0;
  std::optional<SuperNodeMapping> grouping;  // spiderdan only
};

// Super-node pipeline: DFS tree from node 0, groups of alpha nodes, DAN on
// the super-demand, one matching edge per DAN edge, then completion.
//
// The DAN degree cap defaults to max(3, min(ceil(12 * avg degree), alpha)),
// so a super-node never has more DAN edges than members. A DAN edge {a, b}
// is realized, heaviest first, by the free member pair with the highest
// demand that is not an infrastructure edge (falling back to one that is,
// then to the lowest pair). Unmatched and leftover nodes are matched by a
// maximum-weight matching of the demand among them, then by id.
AlgorithmResult SpiderDan(const Graph& g, const SymmetricMatrix& d,
                          const AlgorithmOptions& options = {});

// Demand-graph pairs by decreasing demand (ties: lower pair), taken when
// both ends are free; then completion by id.
AlgorithmResult Greedy(const Graph& g, const SymmetricMatrix& d,
                       const AlgorithmOptions& options = {});

// Maximum-weight matching of the demand graph; then completion by id.
AlgorithmResult MatchingOnDemand(const Graph& g, const SymmetricMatrix& d,
                                 const AlgorithmOptions& options = {});

// Demand-oblivious Chord overlay between blocks of consecutive ids. Block
// count N is the largest power of two <= n / x with x = W(n ln 2) / ln 2.
// Finger (i, i + 2^j mod N) is realized for j = 0, 1, ... in turn across
// all i, between the lowest free ids of the two blocks; a finger is dropped
// when either block is full, and skipped when the block pair already has
// one. Remaining nodes are paired by id.
AlgorithmResult SuperChord(const Graph& g,
                           const AlgorithmOptions& options = {});

// Runs one algorithm and fills runtime_ms.
AlgorithmResult RunAlgorithm(Algorithm a, const Graph& g,
                             const SymmetricMatrix& d,
                             const AlgorithmOptions& options = {});

// Pairs every free node (mate == kNoNode) with the next free node in id
// order; returns the number of edges added. Needs an even free count.
int CompleteById(std::vector<NodeId>& mate, Matching& m);

}  // namespace matchaug

#endif  // MATCHAUG_ALGORITHMS_H_
