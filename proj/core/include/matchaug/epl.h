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

#ifndef MATCHAUG_EPL_H_
#define MATCHAUG_EPL_H_

#include <string>

#include "matchaug/demand.h"
#include "matchaug/graph.h"

namespace matchaug {

// Expected path length: sum over ordered pairs of D(u,v) * dist_G(u,v).
//
// Runs one BFS per node with nonzero demand, stopping once all of that
// node's partners are reached. Per-source partial sums are added in
// ascending source order, so the result does not depend on num_threads.
// Throws UnreachablePairError for a demand pair without a path and
// ValidationError if the node counts differ.
double Epl(const Graph& g, const SymmetricMatrix& d, int num_threads = 1);

struct CostReport {
  std::string instance;
  std::string algorithm;
  double epl = 0.0;
  double ratio_to_baseline = 0.0;
  double runtime_ms = 0.0;
};

}  // namespace matchaug

#endif  // MATCHAUG_EPL_H_
