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

#ifndef MATCHAUG_GRAPH_H_
#define MATCHAUG_GRAPH_H_

#include <cstdint>
#include <span>
#include <vector>

#include "matchaug/types.h"

namespace matchaug {

// Simple undirected graph on nodes 0..n-1 with sorted adjacency lists.
// Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_nodes);

  // Duplicate edges are merged. Self-loops and out-of-range endpoints throw
  // ValidationError.
  static Graph FromEdges(int num_nodes, std::span<const NodePair> edges);

  int num_nodes() const { return static_cast<int>(adjacency_.size()); }
  std::int64_t num_edges() const { return num_edges_; }

  std::span<const NodeId> neighbors(NodeId v) const { return adjacency_[v]; }
  int degree(NodeId v) const {
    return static_cast<int>(adjacency_[v].size());
  }
  int max_degree() const;
  bool HasEdge(NodeId u, NodeId v) const;

  // All edges with u < v in ascending order.
  std::vector<NodePair> Edges() const;

  bool IsConnected() const;

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::int64_t num_edges_ = 0;
};

// Throws ValidationError unless g is a valid infrastructure graph: positive
// even node count and connected.
void RequireInfrastructure(const Graph& g);

// Hop distances from source; -1 for unreachable nodes.
std::vector<int> BfsDistances(const Graph& g, NodeId source);

// Largest hop distance over all pairs. Throws ValidationError if g is
// disconnected.
int Diameter(const Graph& g);

}  // namespace matchaug

#endif  // MATCHAUG_GRAPH_H_
