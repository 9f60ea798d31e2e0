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


// Independent reference implementations used as test oracles.

#ifndef MATCHAUG_TESTS_TEST_SUPPORT_H_
#define MATCHAUG_TESTS_TEST_SUPPORT_H_

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "matchaug/demand.h"
#include "matchaug/graph.h"
#include "matchaug/matching.h"
#include "matchaug/random.h"

namespace matchaug::testing {

inline constexpr int kInf = std::numeric_limits<int>::max() / 4;

// All-pairs hop distances by Floyd-Warshall; kInf when unreachable.
inline std::vector<std::vector<int>> FloydDistances(int n,
                                                    const std::vector<NodePair>& edges) {
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, kInf));
  for (int v = 0; v < n; ++v) dist[v][v] = 0;
  for (const NodePair& e : edges) dist[e.u][e.v] = dist[e.v][e.u] = 1;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
      }
    }
  }
  return dist;
}

inline std::vector<std::vector<int>> FloydDistances(const Graph& g) {
  return FloydDistances(g.num_nodes(), g.Edges());
}

// Sum over ordered pairs of D(u, v) * dist(u, v), from Floyd distances.
inline double ReferenceEpl(const Graph& g, const SymmetricMatrix& d) {
  const auto dist = FloydDistances(g);
  double total = 0.0;
  for (NodeId u = 0; u < d.num_nodes(); ++u) {
    for (const auto& e : d.row(u)) total += e.value * dist[u][e.partner];
  }
  return total;
}

inline std::vector<NodePair> WithMatching(const Graph& g, const Matching& m) {
  std::vector<NodePair> edges = g.Edges();
  for (const NodePair& e : m.edges()) edges.push_back(e);
  return edges;
}

inline int Diameter(int n, const std::vector<NodePair>& edges) {
  int best = 0;
  for (const auto& row : FloydDistances(n, edges)) {
    for (int x : row) best = std::max(best, x);
  }
  return best;
}

// Maximum total weight over all matchings, by exhaustive recursion.
inline double BruteMaxMatchingWeight(int n, const std::vector<WeightedPair>& edges) {
  std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
  std::vector<std::vector<char>> has(n, std::vector<char>(n, 0));
  for (const auto& e : edges) {
    if (e.u == e.v || e.weight <= 0) continue;
    w[e.u][e.v] = w[e.v][e.u] = std::max(w[e.u][e.v], e.weight);
    has[e.u][e.v] = has[e.v][e.u] = 1;
  }
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int from) -> double {
    int u = from;
    while (u < n && used[u]) ++u;
    if (u >= n) return 0.0;
    used[u] = 1;
    double best = self(self, u + 1);  // u stays unmatched
    for (int v = u + 1; v < n; ++v) {
      if (used[v] || !has[u][v]) continue;
      used[v] = 1;
      best = std::max(best, w[u][v] + self(self, u + 1));
      used[v] = 0;
    }
    used[u] = 0;
    return best;
  };
  return rec(rec, 0);
}

// Random spanning tree (each node joins a uniformly chosen earlier node)
// plus `extra` random edges.
inline Graph RandomConnectedGraph(int n, int extra, Rng& rng) {
  std::vector<NodePair> edges;
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(perm[i], perm[rng.UniformBelow(i + 1)]);
  }
  for (int i = 1; i < n; ++i) {
    edges.emplace_back(perm[i], perm[rng.UniformBelow(i)]);
  }
  for (int k = 0; k < extra; ++k) {
    const NodeId u = static_cast<NodeId>(rng.UniformBelow(n));
    const NodeId v = static_cast<NodeId>(rng.UniformBelow(n));
    if (u != v) edges.emplace_back(u, v);
  }
  return Graph::FromEdges(n, edges);
}

inline std::filesystem::path TempPath(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "matchaug_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace matchaug::testing

#endif  // MATCHAUG_TESTS_TEST_SUPPORT_H_
