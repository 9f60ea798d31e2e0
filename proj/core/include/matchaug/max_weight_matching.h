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

#ifndef MATCHAUG_MAX_WEIGHT_MATCHING_H_
#define MATCHAUG_MAX_WEIGHT_MATCHING_H_

#include <span>
#include <vector>

#include "matchaug/deadline.h"
#include "matchaug/demand.h"

namespace matchaug {

// Maximum-weight matching in a general graph (Edmonds' blossom algorithm
// with dual variables, O(n^3)). Not necessarily of maximum cardinality.
//
// edges are unordered pairs with weights; edges of weight <= 0 and self
// loops are ignored. Returns mate[v] (kNoNode when unmatched). The deadline
// is polled once per augmentation stage.
std::vector<NodeId> MaxWeightMatching(int num_nodes,
                                      std::span<const WeightedPair> edges,
                                      const Deadline& deadline = Deadline());

}  // namespace matchaug

#endif  // MATCHAUG_MAX_WEIGHT_MATCHING_H_
