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

#include "matchaug/topology.h"

#include <cstdint>

namespace matchaug {
namespace {

void CheckDim(int d, const char* what) {
  if (d < 3) {
    throw ValidationError(std::string(what) + " dimension must be >= 3, got " +
                          std::to_string(d));
  }
}

void CheckEvenProduct(std::int64_t n) {
  if (n % 2 != 0) {
    throw ValidationError("node count must be even, got " + std::to_string(n));
  }
  if (n > (1 << 28)) throw ValidationError("topology too large");
}

}  // namespace

int TopologySpec::num_nodes() const {
  std::int64_t n = 1;
  for (int d : dims) n *= d;
  return static_cast<int>(n);
}

std::string TopologySpec::Name() const {
  std::string out(TopologyKindName(kind));
  for (std::size_t i = 0; i < dims.size(); ++i) {
    out += (i == 0 ? "-" : "x") + std::to_string(dims[i]);
  }
  return out;
}

TopologyKind ParseTopologyKind(std::string_view name) {
  if (name == "ring") return TopologyKind::kRing;
  if (name == "torus2d") return TopologyKind::kTorus2d;
  if (name == "torus3d") return TopologyKind::kTorus3d;
  throw ValidationError("unknown topology kind '" + std::string(name) + "'");
}

std::string_view TopologyKindName(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::kRing:
      return "ring";
    case TopologyKind::kTorus2d:
      return "torus2d";
    case TopologyKind::kTorus3d:
      return "torus3d";
  }
  return "?";
}

Graph Ring(int n) {
  if (n < 4 || n % 2 != 0) {
    throw ValidationError("ring needs an even n >= 4, got " +
                          std::to_string(n));
  }
  std::vector<NodePair> edges;
  edges.reserve(n);
  for (NodeId i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::FromEdges(n, edges);
}

Graph Torus2d(int a, int b) {
  CheckDim(a, "torus2d");
  CheckDim(b, "torus2d");
  CheckEvenProduct(std::int64_t{a} * b);
  const auto id = [b](int i, int j) { return static_cast<NodeId>(i * b + j); };
  std::vector<NodePair> edges;
  edges.reserve(2 * a * b);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      edges.emplace_back(id(i, j), id((i + 1) % a, j));
      edges.emplace_back(id(i, j), id(i, (j + 1) % b));
    }
  }
  return Graph::FromEdges(a * b, edges);
}

Graph Torus3d(int a, int b, int c) {
  CheckDim(a, "torus3d");
  CheckDim(b, "torus3d");
  CheckDim(c, "torus3d");
  CheckEvenProduct(std::int64_t{a} * b * c);
  const auto id = [b, c](int i, int j, int k) {
    return static_cast<NodeId>((i * b + j) * c + k);
  };
  std::vector<NodePair> edges;
  edges.reserve(3 * a * b * c);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      for (int k = 0; k < c; ++k) {
        edges.emplace_back(id(i, j, k), id((i + 1) % a, j, k));
        edges.emplace_back(id(i, j, k), id(i, (j + 1) % b, k));
        edges.emplace_back(id(i, j, k), id(i, j, (k + 1) % c));
      }
    }
  }
  return Graph::FromEdges(a * b * c, edges);
}

Graph GenerateTopology(const TopologySpec& spec) {
  const std::size_t want = spec.kind == TopologyKind::kRing      ? 1
                           : spec.kind == TopologyKind::kTorus2d ? 2
                                                                 : 3;
  if (spec.dims.size() != want) {
    throw ValidationError(std::string(TopologyKindName(spec.kind)) +
                          " takes " + std::to_string(want) + " dimension(s)");
  }
  switch (spec.kind) {
    case TopologyKind::kRing:
      return Ring(spec.dims[0]);
    case TopologyKind::kTorus2d:
      return Torus2d(spec.dims[0], spec.dims[1]);
    case TopologyKind::kTorus3d:
      return Torus3d(spec.dims[0], spec.dims[1], spec.dims[2]);
  }
  throw ValidationError("unknown topology kind");
}

}  // namespace matchaug
