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


#include "matchaug/algorithms.h"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <sstream>

#include "matchaug/dan.h"
#include "matchaug/demand_sources.h"
#include "matchaug/epl.h"
#include "matchaug/io.h"
#include "matchaug/lambert_w.h"
#include "matchaug/max_weight_matching.h"

namespace matchaug {
namespace {

constexpr std::array<Algorithm, 4> kAll = {
    Algorithm::kSpiderDan, Algorithm::kGreedy, Algorithm::kMatchingOnDemand,
    Algorithm::kSuperChord};

void RequireEvenNodes(const Graph& g) {
  if (g.num_nodes() <= 0 || g.num_nodes() % 2 != 0) {
    throw ValidationError("a perfect matching needs an even, positive node "
                          "count, got " + std::to_string(g.num_nodes()));
  }
}

void RequireSameSize(const Graph& g, const SymmetricMatrix& d) {
  if (g.num_nodes() != d.num_nodes()) {
    throw ValidationError("graph has " + std::to_string(g.num_nodes()) +
                          " nodes, demand has " +
                          std::to_string(d.num_nodes()));
  }
}

void AddEdge(std::vector<NodeId>& mate, Matching& m, NodeId u, NodeId v) {
  mate[u] = v;
  mate[v] = u;
  m.Add(u, v);
}

// Maximum-weight matching of the demand graph restricted to free nodes.
int MatchFreeByDemand(const Graph& g, const SymmetricMatrix& d,
                      std::vector<NodeId>& mate, Matching& m,
                      const Deadline& deadline) {
  const int n = g.num_nodes();
  std::vector<NodeId> local(n, kNoNode);
  std::vector<NodeId> global;
  for (NodeId v = 0; v < n; ++v) {
    if (mate[v] == kNoNode) {
      local[v] = static_cast<NodeId>(global.size());
      global.push_back(v);
    }
  }
  std::vector<WeightedPair> edges;
  for (NodeId u : global) {
    for (const auto& e : d.row(u)) {
      if (e.partner > u && local[e.partner] != kNoNode &&
          !g.HasEdge(u, e.partner)) {
        edges.push_back({local[u], local[e.partner], e.value});
      }
    }
  }
  if (edges.empty()) return 0;
  const std::vector<NodeId> sub = MaxWeightMatching(
      static_cast<int>(global.size()), edges, deadline);
  int added = 0;
  for (NodeId i = 0; i < static_cast<NodeId>(sub.size()); ++i) {
    if (sub[i] != kNoNode && i < sub[i]) {
      AddEdge(mate, m, global[i], global[sub[i]]);
      ++added;
    }
  }
  return added;
}

struct DanRealization {
  int realized = 0;
  int unrealized = 0;
};

DanRealization RealizeDan(const Graph& g, const SymmetricMatrix& d,
                          const SuperNodeMapping& mapping,
                          const SymmetricMatrix& super_demand,
                          const Graph& dan, std::vector<NodeId>& mate,
                          Matching& m, const Deadline& deadline) {
  struct DanEdge {
    NodeId a, b;
    double weight;
  };
  std::vector<DanEdge> order;
  for (const NodePair& e : dan.Edges()) {
    order.push_back({e.u, e.v, super_demand.at(e.u, e.v)});
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const DanEdge& x, const DanEdge& y) {
                     return x.weight > y.weight;
                   });
  DanRealization r;
  for (const DanEdge& e : order) {
    deadline.Check();
    // Best (non-infrastructure, demand, -pair) among free member pairs.
    bool found = false;
    bool best_fresh = false;
    double best_demand = 0.0;
    NodePair best;
    for (NodeId x : mapping.groups[e.a]) {
      if (mate[x] != kNoNode) continue;
      for (NodeId y : mapping.groups[e.b]) {
        if (mate[y] != kNoNode) continue;
        const NodePair p(x, y);
        const bool fresh = !g.HasEdge(x, y);
        const double demand = d.at(x, y);
        bool better = !found;
        if (!better) {
          if (fresh != best_fresh) {
            better = fresh;
          } else if (demand != best_demand) {
            better = demand > best_demand;
          } else {
            better = p < best;
          }
        }
        if (better) {
          found = true;
          best_fresh = fresh;
          best_demand = demand;
          best = p;
        }
      }
    }
    if (found) {
      AddEdge(mate, m, best.u, best.v);
      ++r.realized;
    } else {
      ++r.unrealized;
    }
  }
  return r;
}

double ElapsedMs(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

std::string_view AlgorithmName(Algorithm a) {
  switch (a) {
    case Algorithm::kSpiderDan:
      return "spiderdan";
    case Algorithm::kGreedy:
      return "greedy";
    case Algorithm::kMatchingOnDemand:
      return "mod";
    case Algorithm::kSuperChord:
      return "superchord";
  }
  return "?";
}

Algorithm ParseAlgorithm(std::string_view name) {
  for (Algorithm a : kAll) {
    if (AlgorithmName(a) == name) return a;
  }
  throw ValidationError("unknown algorithm '" + std::string(name) +
                        "' (expected spiderdan, greedy, mod or superchord)");
}

std::span<const Algorithm> AllAlgorithms() { return kAll; }

std::string AlgorithmTrace::ToString() const {
  std::ostringstream out;
  out << "groups=" << groups << "\n"
      << "leftover=" << leftover << "\n"
      << "delta_cap=" << delta_cap << "\n"
      << "dan_edges=" << dan_edges << "\n"
      << "dan_realized=" << dan_realized << "\n"
      << "dan_unrealized=" << dan_unrealized << "\n"
      << "dan_deferred_partners=" << dan_deferred_partners << "\n"
      << "dan_repair_removed=" << dan_repair_removed << "\n"
      << "dan_epl=" << FormatDouble(dan_epl) << "\n"
      << "dan_lower_bound=" << FormatDouble(dan_lower_bound) << "\n"
      << "blocks=" << blocks << "\n"
      << "fingers_total=" << fingers_total << "\n"
      << "fingers_realized=" << fingers_realized << "\n"
      << "fingers_dropped=" << fingers_dropped << "\n"
      << "fingers_duplicate=" << fingers_duplicate << "\n"
      << "demand_edges=" << demand_edges << "\n"
      << "demand_matched=" << demand_matched << "\n"
      << "completion_demand=" << completion_demand << "\n"
      << "completion_by_id=" << completion_by_id << "\n";
  return out.str();
}

int CompleteById(std::vector<NodeId>& mate, Matching& m) {
  int added = 0;
  NodeId pending = kNoNode;
  for (NodeId v = 0; v < static_cast<NodeId>(mate.size()); ++v) {
    if (mate[v] != kNoNode) continue;
    if (pending == kNoNode) {
      pending = v;
    } else {
      AddEdge(mate, m, pending, v);
      pending = kNoNode;
      ++added;
    }
  }
  if (pending != kNoNode) {
    throw ValidationError("odd number of unmatched nodes");
  }
  return added;
}

AlgorithmResult SpiderDan(const Graph& g, const SymmetricMatrix& d,
                          const AlgorithmOptions& options) {
  RequireEvenNodes(g);
  RequireSameSize(g, d);
  const int n = g.num_nodes();
  AlgorithmResult result;
  AlgorithmTrace& trace = result.trace;

  const SpanningTree tree = DfsTree(g, 0);
  SuperNodeMapping mapping = GroupSupernodes(tree, std::min(options.alpha, n));
  trace.groups = mapping.num_groups();
  trace.leftover = static_cast<int>(mapping.leftover.size());
  options.deadline.Check();

  const SuperDemand sd = BuildSuperDemand(d, mapping);
  std::vector<NodeId> mate(n, kNoNode);
  Matching m;
  if (!sd.demand.empty()) {
    int cap = options.delta_cap;
    if (cap == 0) {
      cap = std::max(3, std::min(DefaultDegreeCap(sd.demand), mapping.alpha));
    }
    trace.delta_cap = cap;
    const SuperDan dan = BuildDan(sd.demand, cap);
    trace.dan_edges = static_cast<int>(dan.graph.num_edges());
    trace.dan_deferred_partners = dan.deferred_partners;
    trace.dan_repair_removed = dan.repair_removed_edges;
    const double mass = sd.demand.ordered_sum();
    trace.dan_epl = Epl(dan.graph, sd.demand) / mass;
    trace.dan_lower_bound =
        EntropyLowerBound(ConditionalEntropy(sd.demand) / mass, cap);
    options.deadline.Check();
    const DanRealization r = RealizeDan(g, d, mapping, sd.demand, dan.graph,
                                        mate, m, options.deadline);
    trace.dan_realized = r.realized;
    trace.dan_unrealized = r.unrealized;
  }
  trace.completion_demand =
      MatchFreeByDemand(g, d, mate, m, options.deadline);
  trace.completion_by_id = CompleteById(mate, m);
  result.matching = std::move(m);
  result.grouping = std::move(mapping);
  return result;
}

AlgorithmResult Greedy(const Graph& g, const SymmetricMatrix& d,
                       const AlgorithmOptions& options) {
  RequireEvenNodes(g);
  RequireSameSize(g, d);
  AlgorithmResult result;
  DemandGraph dg = BuildDemandGraph(g, d);
  result.trace.demand_edges = static_cast<int>(dg.edges.size());
  std::stable_sort(dg.edges.begin(), dg.edges.end(),
                   [](const WeightedPair& a, const WeightedPair& b) {
                     return a.weight > b.weight;
                   });
  options.deadline.Check();
  std::vector<NodeId> mate(g.num_nodes(), kNoNode);
  Matching m;
  for (const WeightedPair& e : dg.edges) {
    if (mate[e.u] == kNoNode && mate[e.v] == kNoNode) {
      AddEdge(mate, m, e.u, e.v);
      ++result.trace.demand_matched;
    }
  }
  result.trace.completion_by_id = CompleteById(mate, m);
  result.matching = std::move(m);
  return result;
}

AlgorithmResult MatchingOnDemand(const Graph& g, const SymmetricMatrix& d,
                                 const AlgorithmOptions& options) {
  RequireEvenNodes(g);
  RequireSameSize(g, d);
  AlgorithmResult result;
  const DemandGraph dg = BuildDemandGraph(g, d);
  result.trace.demand_edges = static_cast<int>(dg.edges.size());
  const std::vector<NodeId> sub =
      MaxWeightMatching(g.num_nodes(), dg.edges, options.deadline);
  std::vector<NodeId> mate(g.num_nodes(), kNoNode);
  Matching m;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (sub[v] != kNoNode && v < sub[v]) {
      AddEdge(mate, m, v, sub[v]);
      ++result.trace.demand_matched;
    }
  }
  result.trace.completion_by_id = CompleteById(mate, m);
  result.matching = std::move(m);
  return result;
}

AlgorithmResult SuperChord(const Graph& g, const AlgorithmOptions& options) {
  RequireEvenNodes(g);
  const int n = g.num_nodes();
  const ChordSizing size = SizeSuperChord(n);
  const int blocks = size.num_blocks;
  AlgorithmResult result;
  AlgorithmTrace& trace = result.trace;
  trace.blocks = blocks;

  // Block i spans [start[i], start[i + 1]); the first n % blocks blocks
  // hold one extra node.
  std::vector<NodeId> start(blocks + 1, 0);
  const int base = n / blocks;
  const int extra = n % blocks;
  for (int i = 0; i < blocks; ++i) {
    start[i + 1] = start[i] + base + (i < extra ? 1 : 0);
  }
  std::vector<NodeId> next_free(start.begin(), start.end() - 1);
  std::vector<NodeId> mate(n, kNoNode);
  Matching m;
  std::vector<std::vector<char>> linked(blocks, std::vector<char>(blocks, 0));
  for (int j = 0; j < size.fingers_per_block; ++j) {
    options.deadline.Check();
    for (int i = 0; i < blocks; ++i) {
      const int t = (i + (1 << j)) % blocks;
      ++trace.fingers_total;
      if (linked[i][t]) {
        ++trace.fingers_duplicate;
        continue;
      }
      if (next_free[i] == start[i + 1] || next_free[t] == start[t + 1]) {
        ++trace.fingers_dropped;
        continue;
      }
      AddEdge(mate, m, next_free[i]++, next_free[t]++);
      linked[i][t] = linked[t][i] = 1;
      ++trace.fingers_realized;
    }
  }
  trace.completion_by_id = CompleteById(mate, m);
  result.matching = std::move(m);
  return result;
}

AlgorithmResult RunAlgorithm(Algorithm a, const Graph& g,
                             const SymmetricMatrix& d,
                             const AlgorithmOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  AlgorithmResult r;
  switch (a) {
    case Algorithm::kSpiderDan:
      r = SpiderDan(g, d, options);
      break;
    case Algorithm::kGreedy:
      r = Greedy(g, d, options);
      break;
    case Algorithm::kMatchingOnDemand:
      r = MatchingOnDemand(g, d, options);
      break;
    case Algorithm::kSuperChord:
      r = SuperChord(g, options);
      break;
  }
  r.runtime_ms = ElapsedMs(start);
  return r;
}

}  // namespace matchaug
