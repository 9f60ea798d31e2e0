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

// Grouping of infrastructure nodes into fixed-size super-nodes.
//
// A DFS spanning tree is cut into groups of alpha nodes: take the deepest
// remaining node, climb alpha levels (or to the root), and peel the alpha
// deepest remaining nodes off that ancestor's subtree. Peeled nodes are
// always leaves of the remaining tree, so it stays connected, and every
// group lies within alpha hops of one ancestor, hence within 2*alpha hops
// of each other in the graph.

#ifndef MATCHAUG_SUPERNODE_H_
#define MATCHAUG_SUPERNODE_H_

#include <iosfwd>
#include <vector>

#include "matchaug/demand.h"
#include "matchaug/graph.h"

namespace matchaug {

struct SpanningTree {
  NodeId root = kNoNode;
  std::vector<NodeId> parent;  // kNoNode for the root
  std::vector<int> depth;
  std::vector<std::vector<NodeId>> children;  // in visit order

  int num_nodes() const { return static_cast<int>(parent.size()); }
};

// DFS tree visiting neighbors in ascending id order. Throws ValidationError
// if g is disconnected or root is out of range.
SpanningTree DfsTree(const Graph& g, NodeId root = 0);

struct SuperNodeMapping {
  int alpha = 0;
  // group_of[v] is v's super-node id, or kNoNode for leftover nodes.
  std::vector<NodeId> group_of;
  // Members of each super-node in the order they were peeled.
  std::vector<std::vector<NodeId>> groups;
  // Fewer than alpha nodes that were not grouped, ascending.
  std::vector<NodeId> leftover;

  int num_groups() const { return static_cast<int>(groups.size()); }
};

// Ties between equally deep nodes go to the lower id. Throws
// ValidationError if alpha < 2.
SuperNodeMapping GroupSupernodes(const SpanningTree& tree, int alpha);

// One group per line, members separated by spaces, then "leftover: ...".
void WriteGroups(std::ostream& out, const SuperNodeMapping& mapping);

struct SuperGraph {
  Graph graph;             // nodes are super-node ids
  bool connected = false;  // false flags super-nodes with no path between
};

// Edges {f(u), f(v)} for every graph edge between two different groups.
// Leftover nodes are ignored.
SuperGraph BuildSuperGraph(const Graph& g, const SuperNodeMapping& mapping);

struct SuperDemand {
  SymmetricMatrix demand;     // over super-node ids, off-diagonal only
  double intra_mass = 0.0;    // ordered mass with both ends in one group
  double leftover_mass = 0.0; // ordered mass touching a leftover node
};

// D_S(a, b) = sum of D(u, v) over u in a, v in b.
SuperDemand BuildSuperDemand(const SymmetricMatrix& d,
                             const SuperNodeMapping& mapping);

}  // namespace matchaug

#endif  // MATCHAUG_SUPERNODE_H_
