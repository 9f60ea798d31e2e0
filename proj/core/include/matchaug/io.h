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

// Plain-text exchange formats.
//
// Edge list (graphs and matchings):
//   # n=<node count>        optional; otherwise max id + 1
//   u v                     one pair per line, 0-based decimal ids
// Demand triples:
//   # n=<node count>        optional; otherwise max id + 1
//   u v value               unordered pair listed once, per-direction value
// Lines starting with '#' are comments; blank lines are ignored. Demand
// values are renormalized on read. Writers emit the "# n=" line and use
// shortest round-trip formatting for values.

#ifndef MATCHAUG_IO_H_
#define MATCHAUG_IO_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "matchaug/demand.h"
#include "matchaug/graph.h"
#include "matchaug/matching.h"

namespace matchaug {

struct EdgeList {
  int num_nodes = 0;
  std::vector<NodePair> edges;
};

EdgeList ReadEdgeList(std::istream& in, const std::string& source = "<input>");
void WriteEdgeList(std::ostream& out, int num_nodes,
                   const std::vector<NodePair>& edges);

Graph ReadGraph(const std::string& path);
void WriteGraph(const std::string& path, const Graph& g);

Matching ReadMatching(const std::string& path);
void WriteMatching(const std::string& path, int num_nodes, const Matching& m);

DemandMatrix ReadDemandTriples(std::istream& in,
                               const std::string& source = "<input>");
void WriteDemandTriples(std::ostream& out, const SymmetricMatrix& d);

DemandMatrix ReadDemand(const std::string& path);
void WriteDemand(const std::string& path, const SymmetricMatrix& d);

// Shortest decimal form that round-trips the double exactly.
std::string FormatDouble(double x);

}  // namespace matchaug

#endif  // MATCHAUG_IO_H_
