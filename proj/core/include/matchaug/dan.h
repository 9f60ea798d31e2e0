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

// Degree-bounded demand-aware networks (DANs).

#ifndef MATCHAUG_DAN_H_
#define MATCHAUG_DAN_H_

#include "matchaug/demand.h"
#include "matchaug/graph.h"

namespace matchaug {

// Conditional entropy in bits: sum over ordered pairs with D(u,v) > 0 of
// D(u,v) * log2(d_u / D(u,v)), d_u the row marginal.
double ConditionalEntropy(const SymmetricMatrix& d);

// H / log2(delta + 1) - 1: no graph of max degree delta has a smaller EPL.
double EntropyLowerBound(double entropy, int delta);

struct EntropyReport {
  double entropy = 0.0;
  double lower_bound = 0.0;
};

EntropyReport Entropy(const SymmetricMatrix& d, int delta);

// Mean number of nonzero entries per row over all rows; 0 for n = 0.
double AverageDemandDegree(const SymmetricMatrix& d);

// max(ceil(12 * average degree), 3).
int DefaultDegreeCap(const SymmetricMatrix& d);

struct SuperDan {
  Graph graph;
  int delta_cap = 0;
  // Demand pairs whose ego-tree placement was refused for lack of degree
  // budget and had to be joined by the repair pass.
  int deferred_partners = 0;
  // Edges dropped by the repair pass to free a slot inside a saturated
  // component (never disconnects it).
  int repair_removed_edges = 0;
};

// Builds a graph over d's nodes with max degree <= delta_cap in which every
// demand pair is connected.
//
// Nodes are processed by decreasing marginal (ties: lower id). Each node u
// places its not-yet-processed, not-yet-adjacent partners, heaviest first,
// into a binary tree rooted at u in level order, so the k-th heaviest lands
// at depth floor(log2(k + 1)). A tree position takes children only while it
// has budget; a partner without budget is skipped and the slot goes to the
// next partner. A final pass joins any demand pair left in different
// components through the nearest nodes with spare budget, first freeing a
// slot by removing a cycle edge if a component is saturated. Nodes with zero
// marginal stay isolated. Throws ValidationError if delta_cap < 3.
SuperDan BuildDan(const SymmetricMatrix& d, int delta_cap);

}  // namespace matchaug

#endif  // MATCHAUG_DAN_H_
