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

#include "matchaug/matching.h"

#include <algorithm>

namespace matchaug {

std::vector<NodePair> Matching::Sorted() const {
  std::vector<NodePair> out = edges_;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NodeId> Matching::Mates(int num_nodes) const {
  std::vector<NodeId> mate(num_nodes, kNoNode);
  for (const NodePair& e : edges_) {
    mate[e.u] = e.v;
    mate[e.v] = e.u;
  }
  return mate;
}

MatchingCheck ValidateMatching(const Matching& m, int num_nodes,
                               bool require_perfect) {
  using Kind = MatchingViolation::Kind;
  MatchingCheck check;
  std::vector<int> cover(std::max(num_nodes, 0), 0);
  for (const NodePair& e : m.edges()) {
    if (e.u < 0 || e.v >= num_nodes) {
      check.violations.push_back({Kind::kOutOfRange, e.u < 0 ? e.u : e.v});
      continue;
    }
    if (e.u == e.v) {
      check.violations.push_back({Kind::kSelfLoop, e.u});
      continue;
    }
    ++cover[e.u];
    ++cover[e.v];
  }
  for (NodeId v = 0; v < num_nodes; ++v) {
    if (cover[v] > 1) check.violations.push_back({Kind::kOverMatched, v});
  }
  if (require_perfect) {
    for (NodeId v = 0; v < num_nodes; ++v) {
      if (cover[v] == 0) check.violations.push_back({Kind::kUnmatched, v});
    }
  }
  return check;
}

std::vector<NodePair> EdgesAlreadyInGraph(const Graph& g, const Matching& m) {
  std::vector<NodePair> out;
  for (const NodePair& e : m.Sorted()) {
    if (g.HasEdge(e.u, e.v)) out.push_back(e);
  }
  return out;
}

Graph Augment(const Graph& g, const Matching& m) {
  const MatchingCheck check = ValidateMatching(m, g.num_nodes(), false);
  if (!check.ok()) {
    const MatchingViolation& first = check.violations.front();
    throw ValidationError("invalid matching at node " +
                          std::to_string(first.node));
  }
  std::vector<NodePair> edges = g.Edges();
  edges.insert(edges.end(), m.edges().begin(), m.edges().end());
  return Graph::FromEdges(g.num_nodes(), edges);
}

}  // namespace matchaug
