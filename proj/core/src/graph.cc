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

#include "matchaug/graph.h"

#include <algorithm>
#include <deque>

namespace matchaug {

std::string ToString(const NodePair& p) {
  return "(" + std::to_string(p.u) + "," + std::to_string(p.v) + ")";
}

Graph::Graph(int num_nodes) {
  if (num_nodes < 0) throw ValidationError("negative node count");
  adjacency_.resize(num_nodes);
}

Graph Graph::FromEdges(int num_nodes, std::span<const NodePair> edges) {
  Graph g(num_nodes);
  for (const NodePair& e : edges) {
    if (e.u < 0 || e.v >= num_nodes) {
      throw ValidationError("edge endpoint out of range", e);
    }
    if (e.u == e.v) throw ValidationError("self-loop", e);
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  std::int64_t twice = 0;
  for (auto& nbrs : g.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    twice += static_cast<std::int64_t>(nbrs.size());
  }
  g.num_edges_ = twice / 2;
  return g;
}

int Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& nbrs : adjacency_) best = std::max(best, nbrs.size());
  return static_cast<int>(best);
}

bool Graph::HasEdge(NodeId u, NodeId v) const {
  if (u < 0 || v < 0 || u >= num_nodes() || v >= num_nodes()) return false;
  const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u]
                                                               : adjacency_[v];
  const NodeId other = &a == &adjacency_[u] ? v : u;
  return std::binary_search(a.begin(), a.end(), other);
}

std::vector<NodePair> Graph::Edges() const {
  std::vector<NodePair> out;
  out.reserve(static_cast<std::size_t>(num_edges_));
  for (NodeId u = 0; u < num_nodes(); ++u) {
    for (NodeId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::IsConnected() const {
  if (num_nodes() == 0) return true;
  const std::vector<int> dist = BfsDistances(*this, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

void RequireInfrastructure(const Graph& g) {
  if (g.num_nodes() <= 0) {
    throw ValidationError("infrastructure graph has no nodes");
  }
  if (g.num_nodes() % 2 != 0) {
    throw ValidationError("infrastructure graph needs an even node count, got " +
                          std::to_string(g.num_nodes()));
  }
  if (!g.IsConnected()) {
    throw ValidationError("infrastructure graph is disconnected");
  }
}

std::vector<int> BfsDistances(const Graph& g, NodeId source) {
  std::vector<int> dist(g.num_nodes(), -1);
  std::vector<NodeId> queue;
  queue.reserve(g.num_nodes());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    for (NodeId w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

int Diameter(const Graph& g) {
  int best = 0;
  for (NodeId s = 0; s < g.num_nodes(); ++s) {
    for (int d : BfsDistances(g, s)) {
      if (d < 0) throw ValidationError("diameter of a disconnected graph");
      best = std::max(best, d);
    }
  }
  return best;
}

}  // namespace matchaug
