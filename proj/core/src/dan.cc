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

#include "matchaug/dan.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <vector>

namespace matchaug {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  NodeId Find(NodeId v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  void Union(NodeId a, NodeId b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<NodeId> parent_;
};

// Mutable degree-capped graph used during construction.
class CappedGraph {
 public:
  CappedGraph(int n, int cap) : adj_(n), cap_(cap) {}

  int spare(NodeId v) const { return cap_ - static_cast<int>(adj_[v].size()); }
  bool Adjacent(NodeId u, NodeId v) const {
    const auto& a = adj_[u];
    return std::find(a.begin(), a.end(), v) != a.end();
  }
  void AddEdge(NodeId u, NodeId v) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  void RemoveEdge(NodeId u, NodeId v) {
    std::erase(adj_[u], v);
    std::erase(adj_[v], u);
  }
  const std::vector<NodeId>& neighbors(NodeId v) const { return adj_[v]; }
  int num_nodes() const { return static_cast<int>(adj_.size()); }

  std::vector<NodePair> Edges() const {
    std::vector<NodePair> out;
    for (NodeId u = 0; u < num_nodes(); ++u) {
      for (NodeId v : adj_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  // Nodes of s's component in BFS order.
  std::vector<NodeId> Component(NodeId s) const {
    std::vector<NodeId> order{s};
    std::vector<char> seen(num_nodes(), 0);
    seen[s] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (NodeId w : adj_[order[head]]) {
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
      }
    }
    return order;
  }

  // Bridges of s's component.
  std::set<NodePair> Bridges(NodeId s) const {
    std::set<NodePair> bridges;
    std::vector<int> disc(num_nodes(), -1), low(num_nodes(), 0);
    struct Frame {
      NodeId node;
      NodeId parent;
      std::size_t next;
    };
    std::vector<Frame> stack{{s, kNoNode, 0}};
    int timer = 0;
    disc[s] = low[s] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nbrs = adj_[f.node];
      if (f.next < nbrs.size()) {
        const NodeId w = nbrs[f.next++];
        if (w == f.parent) continue;
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.node, 0});
        } else {
          low[f.node] = std::min(low[f.node], disc[w]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (done.parent != kNoNode) {
        low[done.parent] = std::min(low[done.parent], low[done.node]);
        if (low[done.node] > disc[done.parent]) {
          bridges.emplace(done.node, done.parent);
        }
      }
    }
    return bridges;
  }

 private:
  std::vector<std::vector<NodeId>> adj_;
  int cap_;
};

// A node of s's component with a free degree slot, nearest to s first.
// Frees one by dropping a non-bridge edge when the component is saturated.
NodeId FreeSlotNear(CappedGraph& h, NodeId s, int& removed_edges) {
  const std::vector<NodeId> order = h.Component(s);
  for (NodeId v : order) {
    if (h.spare(v) > 0) return v;
  }
  // Every node has degree cap >= 3, so the component has a cycle.
  const std::set<NodePair> bridges = h.Bridges(s);
  for (NodeId v : order) {
    NodeId drop = kNoNode;
    for (NodeId w : h.neighbors(v)) {
      if (!bridges.contains(NodePair(v, w)) && (drop == kNoNode || w < drop)) {
        drop = w;
      }
    }
    if (drop != kNoNode) {
      h.RemoveEdge(v, drop);
      ++removed_edges;
      return v;
    }
  }
  throw Error("saturated component without a cycle edge");
}

}  // namespace

double ConditionalEntropy(const SymmetricMatrix& d) {
  double h = 0.0;
  for (NodeId u = 0; u < d.num_nodes(); ++u) {
    const double marginal = d.marginal(u);
    for (const auto& e : d.row(u)) {
      if (e.value > 0.0) h += e.value * std::log2(marginal / e.value);
    }
  }
  return std::max(h, 0.0);
}

double EntropyLowerBound(double entropy, int delta) {
  return entropy / std::log2(static_cast<double>(delta) + 1.0) - 1.0;
}

EntropyReport Entropy(const SymmetricMatrix& d, int delta) {
  EntropyReport r;
  r.entropy = ConditionalEntropy(d);
  r.lower_bound = EntropyLowerBound(r.entropy, delta);
  return r;
}

double AverageDemandDegree(const SymmetricMatrix& d) {
  if (d.num_nodes() == 0) return 0.0;
  return 2.0 * static_cast<double>(d.num_pairs()) /
         static_cast<double>(d.num_nodes());
}

int DefaultDegreeCap(const SymmetricMatrix& d) {
  return std::max(3, static_cast<int>(std::ceil(12.0 * AverageDemandDegree(d))));
}

SuperDan BuildDan(const SymmetricMatrix& d, int delta_cap) {
  if (delta_cap < 3) {
    throw ValidationError("DAN degree cap must be >= 3, got " +
                          std::to_string(delta_cap));
  }
  const int n = d.num_nodes();
  SuperDan dan;
  dan.delta_cap = delta_cap;
  CappedGraph h(n, delta_cap);

  std::vector<NodeId> order;
  std::vector<double> marginal(n, 0.0);
  for (NodeId v = 0; v < n; ++v) {
    marginal[v] = d.marginal(v);
    if (marginal[v] > 0.0) order.push_back(v);
  }
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return marginal[a] > marginal[b];
  });

  std::vector<char> processed(n, 0);
  std::vector<int> tree_children(n, 0);
  std::vector<SymmetricMatrix::Entry> partners;
  std::vector<NodeId> positions;
  for (NodeId root : order) {
    partners.clear();
    for (const auto& e : d.row(root)) {
      if (!processed[e.partner] && !h.Adjacent(root, e.partner)) {
        partners.push_back(e);
      }
    }
    std::stable_sort(partners.begin(), partners.end(),
                     [](const auto& a, const auto& b) {
                       return a.value > b.value;
                     });
    positions.assign(1, root);
    tree_children[root] = 0;
    std::size_t head = 0;
    for (const auto& e : partners) {
      const NodeId v = e.partner;
      if (h.spare(v) == 0) {
        ++dan.deferred_partners;
        continue;
      }
      while (head < positions.size() &&
             (tree_children[positions[head]] >= 2 ||
              h.spare(positions[head]) == 0)) {
        ++head;
      }
      if (head == positions.size()) {
        ++dan.deferred_partners;
        continue;
      }
      const NodeId parent = positions[head];
      ++tree_children[parent];
      if (!h.Adjacent(parent, v)) h.AddEdge(parent, v);
      tree_children[v] = 0;
      positions.push_back(v);
    }
    processed[root] = 1;
  }

  DisjointSets components(n);
  for (const NodePair& e : h.Edges()) components.Union(e.u, e.v);
  for (const WeightedPair& p : d.Pairs()) {
    if (components.Find(p.u) == components.Find(p.v)) continue;
    const NodeId x = FreeSlotNear(h, p.u, dan.repair_removed_edges);
    const NodeId y = FreeSlotNear(h, p.v, dan.repair_removed_edges);
    h.AddEdge(x, y);
    components.Union(x, y);
  }
  dan.graph = Graph::FromEdges(n, h.Edges());
  return dan;
}

}  // namespace matchaug
