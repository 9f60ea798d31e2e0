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

#include "matchaug/demand.h"

#include <algorithm>
#include <cmath>
#include <map>

namespace matchaug {

SymmetricMatrix::SymmetricMatrix(int num_nodes) {
  if (num_nodes < 0) throw ValidationError("negative node count");
  rows_.resize(num_nodes);
}

SymmetricMatrix SymmetricMatrix::FromPairs(
    int num_nodes, std::span<const WeightedPair> pairs) {
  SymmetricMatrix m(num_nodes);
  for (const WeightedPair& p : pairs) {
    const NodePair key(p.u, p.v);
    if (key.u < 0 || key.v >= num_nodes) {
      throw ValidationError("demand entry out of range", key);
    }
    if (key.u == key.v) {
      throw ValidationError("nonzero diagonal demand", key);
    }
    if (!std::isfinite(p.weight) || p.weight < 0.0) {
      throw ValidationError("negative or non-finite demand", key);
    }
    if (p.weight == 0.0) continue;
    m.rows_[key.u].push_back({key.v, p.weight});
    m.rows_[key.v].push_back({key.u, p.weight});
  }
  for (auto& row : m.rows_) {
    std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) {
      return a.partner < b.partner;
    });
    std::size_t out = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (out > 0 && row[out - 1].partner == row[i].partner) {
        row[out - 1].value += row[i].value;
      } else {
        row[out++] = row[i];
      }
    }
    row.resize(out);
  }
  // Summation in ascending (row, partner) order.
  std::size_t entries = 0;
  for (const auto& row : m.rows_) {
    for (const Entry& e : row) m.ordered_sum_ += e.value;
    entries += row.size();
  }
  m.num_pairs_ = entries / 2;
  return m;
}

double SymmetricMatrix::at(NodeId u, NodeId v) const {
  if (u < 0 || u >= num_nodes()) return 0.0;
  const auto& r = rows_[u];
  auto it = std::lower_bound(
      r.begin(), r.end(), v,
      [](const Entry& e, NodeId id) { return e.partner < id; });
  return (it != r.end() && it->partner == v) ? it->value : 0.0;
}

double SymmetricMatrix::marginal(NodeId v) const {
  double sum = 0.0;
  for (const Entry& e : rows_[v]) sum += e.value;
  return sum;
}

std::vector<WeightedPair> SymmetricMatrix::Pairs() const {
  std::vector<WeightedPair> out;
  out.reserve(num_pairs_);
  for (NodeId u = 0; u < num_nodes(); ++u) {
    for (const Entry& e : rows_[u]) {
      if (u < e.partner) out.push_back({u, e.partner, e.value});
    }
  }
  return out;
}

void SymmetricMatrix::Scale(double factor) {
  ordered_sum_ = 0.0;
  for (auto& row : rows_) {
    for (Entry& e : row) {
      e.value *= factor;
      ordered_sum_ += e.value;
    }
  }
}

DemandMatrix DemandMatrix::Normalize(SymmetricMatrix raw) {
  if (raw.empty() || !(raw.ordered_sum() > 0.0)) {
    throw ValidationError("demand matrix is all zero");
  }
  DemandMatrix d(std::move(raw));
  d.Scale(1.0 / d.ordered_sum());
  return d;
}

DemandMatrix DemandMatrix::FromPairs(int num_nodes,
                                     std::span<const WeightedPair> pairs) {
  return Normalize(SymmetricMatrix::FromPairs(num_nodes, pairs));
}

DemandMatrix NormalizeDemand(int num_nodes,
                             std::span<const DemandTriplet> entries) {
  std::map<std::pair<NodeId, NodeId>, double> ordered;
  for (const DemandTriplet& t : entries) {
    const NodePair key(t.u, t.v);
    if (key.u < 0 || key.v >= num_nodes) {
      throw ValidationError("demand entry out of range", key);
    }
    if (t.u == t.v && t.value != 0.0) {
      throw ValidationError("nonzero diagonal demand", key);
    }
    if (!std::isfinite(t.value) || t.value < 0.0) {
      throw ValidationError("negative or non-finite demand", key);
    }
    if (t.u != t.v) ordered[{t.u, t.v}] += t.value;
  }
  std::vector<WeightedPair> pairs;
  for (const auto& [key, value] : ordered) {
    const auto [u, v] = key;
    auto mirror = ordered.find({v, u});
    const double other = mirror == ordered.end() ? 0.0 : mirror->second;
    if (other != value) {
      throw ValidationError("asymmetric demand", NodePair(u, v));
    }
    if (u < v) pairs.push_back({u, v, value});
  }
  return DemandMatrix::FromPairs(num_nodes, pairs);
}

DemandMatrix NormalizeDemand(const DemandMatrix& d) {
  return DemandMatrix::Normalize(d);
}

}  // namespace matchaug
