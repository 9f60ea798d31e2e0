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

#include "matchaug/supernode.h"

#include <algorithm>
#include <ostream>
#include <set>
#include <utility>

namespace matchaug {

SpanningTree DfsTree(const Graph& g, NodeId root) {
  const int n = g.num_nodes();
  if (root < 0 || root >= n) throw ValidationError("DFS root out of range");
  SpanningTree tree;
  tree.root = root;
  tree.parent.assign(n, kNoNode);
  tree.depth.assign(n, -1);
  tree.children.assign(n, {});
  // Explicit stack of (node, next neighbor index) mirrors recursive DFS.
  std::vector<std::pair<NodeId, std::size_t>> stack;
  stack.emplace_back(root, 0);
  tree.depth[root] = 0;
  int visited = 1;
  while (!stack.empty()) {
    auto& [u, next] = stack.back();
    const auto nbrs = g.neighbors(u);
    if (next == nbrs.size()) {
      stack.pop_back();
      continue;
    }
    const NodeId w = nbrs[next++];
    if (tree.depth[w] >= 0) continue;
    tree.parent[w] = u;
    tree.depth[w] = tree.depth[u] + 1;
    tree.children[u].push_back(w);
    ++visited;
    stack.emplace_back(w, 0);
  }
  if (visited != n) throw ValidationError("graph is disconnected");
  return tree;
}

SuperNodeMapping GroupSupernodes(const SpanningTree& tree, int alpha) {
  if (alpha < 2) {
    throw ValidationError("super-node size must be >= 2, got " +
                          std::to_string(alpha));
  }
  const int n = tree.num_nodes();
  SuperNodeMapping mapping;
  mapping.alpha = alpha;
  mapping.group_of.assign(n, kNoNode);

  // Deepest first, lowest id among equals.
  std::set<std::pair<int, NodeId>> by_depth;
  for (NodeId v = 0; v < n; ++v) by_depth.emplace(-tree.depth[v], v);
  std::vector<char> removed(n, 0);
  std::vector<NodeId> subtree;
  std::vector<NodeId> stack;

  while (static_cast<int>(by_depth.size()) >= alpha) {
    const NodeId deepest = by_depth.begin()->second;
    NodeId anchor = deepest;
    for (int i = 0; i < alpha && tree.parent[anchor] != kNoNode; ++i) {
      anchor = tree.parent[anchor];
    }
    // Remaining nodes form a rooted subtree, so the anchor is present and
    // its remaining descendants are reachable through remaining children.
    subtree.clear();
    stack.assign(1, anchor);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      subtree.push_back(u);
      for (NodeId c : tree.children[u]) {
        if (!removed[c]) stack.push_back(c);
      }
    }
    // Peeling the deepest node repeatedly equals taking the alpha deepest,
    // since removing a leaf changes no other depth.
    std::partial_sort(subtree.begin(), subtree.begin() + alpha, subtree.end(),
                      [&](NodeId a, NodeId b) {
                        if (tree.depth[a] != tree.depth[b]) {
                          return tree.depth[a] > tree.depth[b];
                        }
                        return a < b;
                      });
    const NodeId group = mapping.num_groups();
    std::vector<NodeId>& members = mapping.groups.emplace_back();
    for (int i = 0; i < alpha; ++i) {
      const NodeId v = subtree[i];
      members.push_back(v);
      mapping.group_of[v] = group;
      removed[v] = 1;
      by_depth.erase({-tree.depth[v], v});
    }
  }
  for (const auto& [neg_depth, v] : by_depth) mapping.leftover.push_back(v);
  std::sort(mapping.leftover.begin(), mapping.leftover.end());
  return mapping;
}

void WriteGroups(std::ostream& out, const SuperNodeMapping& mapping) {
  for (const auto& members : mapping.groups) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      out << (i ? " " : "") << members[i];
    }
    out << "\n";
  }
  out << "leftover:";
  for (NodeId v : mapping.leftover) out << " " << v;
  out << "\n";
}

SuperGraph BuildSuperGraph(const Graph& g, const SuperNodeMapping& mapping) {
  std::vector<NodePair> edges;
  for (const NodePair& e : g.Edges()) {
    const NodeId a = mapping.group_of[e.u];
    const NodeId b = mapping.group_of[e.v];
    if (a == kNoNode || b == kNoNode || a == b) continue;
    edges.emplace_back(a, b);
  }
  SuperGraph sg;
  sg.graph = Graph::FromEdges(mapping.num_groups(), edges);
  sg.connected = sg.graph.IsConnected();
  return sg;
}

SuperDemand BuildSuperDemand(const SymmetricMatrix& d,
                             const SuperNodeMapping& mapping) {
  SuperDemand sd;
  std::vector<WeightedPair> pairs;
  for (const WeightedPair& p : d.Pairs()) {
    const NodeId a = mapping.group_of[p.u];
    const NodeId b = mapping.group_of[p.v];
    if (a == kNoNode || b == kNoNode) {
      sd.leftover_mass += 2.0 * p.weight;
    } else if (a == b) {
      sd.intra_mass += 2.0 * p.weight;
    } else {
      pairs.push_back({std::min(a, b), std::max(a, b), p.weight});
    }
  }
  sd.demand = SymmetricMatrix::FromPairs(mapping.num_groups(), pairs);
  return sd;
}

}  // namespace matchaug
