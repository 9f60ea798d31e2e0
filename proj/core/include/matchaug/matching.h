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

#ifndef MATCHAUG_MATCHING_H_
#define MATCHAUG_MATCHING_H_

#include <cstddef>
#include <span>
#include <vector>

#include "matchaug/graph.h"
#include "matchaug/types.h"

namespace matchaug {

// A set of augmentation edges. Validity (node-disjointness) is checked by
// ValidateMatching, not on insertion, so that invalid inputs can be
// reported in full.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<NodePair> edges) : edges_(std::move(edges)) {}

  void Add(NodeId u, NodeId v) { edges_.emplace_back(u, v); }

  std::span<const NodePair> edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  // Edges in ascending order.
  std::vector<NodePair> Sorted() const;

  // mate[v] = partner of v or kNoNode. Assumes a valid matching on n nodes.
  std::vector<NodeId> Mates(int num_nodes) const;

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.Sorted() == b.Sorted();
  }

 private:
  std::vector<NodePair> edges_;
};

struct MatchingViolation {
  enum class Kind { kOutOfRange, kSelfLoop, kOverMatched, kUnmatched };
  Kind kind;
  NodeId node;

  friend bool operator==(const MatchingViolation&,
                         const MatchingViolation&) = default;
};

struct MatchingCheck {
  std::vector<MatchingViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Reports every node covered more than once and, if require_perfect, every
// uncovered node, in ascending node order after any range/self-loop issues.
MatchingCheck ValidateMatching(const Matching& m, int num_nodes,
                               bool require_perfect);

// Matching edges that coincide with edges of g. They are legal but add
// nothing; callers may surface them as warnings.
std::vector<NodePair> EdgesAlreadyInGraph(const Graph& g, const Matching& m);

// G + M. Duplicated edges are absorbed. Throws ValidationError if m is not a
// valid matching on g's nodes.
Graph Augment(const Graph& g, const Matching& m);

}  // namespace matchaug

#endif  // MATCHAUG_MATCHING_H_
