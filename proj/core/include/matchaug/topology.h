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

#ifndef MATCHAUG_TOPOLOGY_H_
#define MATCHAUG_TOPOLOGY_H_

#include <string>
#include <string_view>
#include <vector>

#include "matchaug/graph.h"

namespace matchaug {

enum class TopologyKind { kRing, kTorus2d, kTorus3d };

struct TopologySpec {
  TopologyKind kind = TopologyKind::kRing;
  std::vector<int> dims;

  int num_nodes() const;
  // "ring-64", "torus2d-4x4", ...
  std::string Name() const;
};

TopologyKind ParseTopologyKind(std::string_view name);
std::string_view TopologyKindName(TopologyKind kind);

// Cycle 0-1-...-(n-1)-0. Requires even n >= 4.
Graph Ring(int n);

// a x b torus; node (i, j) has id i*b + j. Requires a, b >= 3 and a*b even.
Graph Torus2d(int a, int b);

// a x b x c torus, 6-regular; node (i, j, k) has id (i*b + j)*c + k.
// Requires every dimension >= 3 and a*b*c even.
Graph Torus3d(int a, int b, int c);

// Dispatches on spec.kind; throws ValidationError on a wrong dims count.
Graph GenerateTopology(const TopologySpec& spec);

}  // namespace matchaug

#endif  // MATCHAUG_TOPOLOGY_H_
