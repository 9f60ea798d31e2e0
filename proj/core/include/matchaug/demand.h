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

#ifndef MATCHAUG_DEMAND_H_
#define MATCHAUG_DEMAND_H_

#include <cstddef>
#include <span>
#include <vector>

#include "matchaug/types.h"

namespace matchaug {

// One unordered pair with a weight; u < v.
struct WeightedPair {
  NodeId u = kNoNode;
  NodeId v = kNoNode;
  double weight = 0.0;
};

// One ordered matrix entry (row u, column v).
struct DemandTriplet {
  NodeId u = kNoNode;
  NodeId v = kNoNode;
  double value = 0.0;
};

// Sparse symmetric nonnegative matrix with zero diagonal. Every unordered
// pair {u,v} in the support is stored in both rows, so row(u) lists the
// value of D(u,v) = D(v,u). Sums over "ordered pairs" count each unordered
// pair twice.
class SymmetricMatrix {
 public:
  struct Entry {
    NodeId partner = kNoNode;
    double value = 0.0;
  };

  SymmetricMatrix() = default;
  explicit SymmetricMatrix(int num_nodes);

  // Each unordered pair is listed once with its per-direction value.
  // Duplicates are summed, zero weights dropped. Throws ValidationError on
  // a diagonal entry, a negative or non-finite weight, or an out-of-range id.
  static SymmetricMatrix FromPairs(int num_nodes,
                                   std::span<const WeightedPair> pairs);

  int num_nodes() const { return static_cast<int>(rows_.size()); }

  // Entries of row v sorted by partner id.
  std::span<const Entry> row(NodeId v) const { return rows_[v]; }
  double at(NodeId u, NodeId v) const;

  // Sum of row v.
  double marginal(NodeId v) const;
  // Sum over all ordered entries.
  double ordered_sum() const { return ordered_sum_; }
  // Number of unordered pairs with nonzero value.
  std::size_t num_pairs() const { return num_pairs_; }
  bool empty() const { return num_pairs_ == 0; }

  // Support as unordered pairs, ascending (u, v).
  std::vector<WeightedPair> Pairs() const;

 protected:
  void Scale(double factor);

 private:
  std::vector<std::vector<Entry>> rows_;
  double ordered_sum_ = 0.0;
  std::size_t num_pairs_ = 0;
};

// A SymmetricMatrix whose ordered entries sum to 1.
class DemandMatrix : public SymmetricMatrix {
 public:
  DemandMatrix() = default;

  // Scales raw per-direction pair values so the ordered sum is 1. Throws
  // ValidationError on the errors of SymmetricMatrix::FromPairs and on an
  // all-zero input.
  static DemandMatrix FromPairs(int num_nodes,
                                std::span<const WeightedPair> pairs);

  static DemandMatrix Normalize(SymmetricMatrix raw);

 private:
  explicit DemandMatrix(SymmetricMatrix m) : SymmetricMatrix(std::move(m)) {}
};

// Normalizes a raw matrix given as ordered entries. The entries must be
// symmetric (every (u,v,x) has a matching (v,u,x)); repeated ordered
// entries are summed first. Violations throw ValidationError naming the
// offending pair.
DemandMatrix NormalizeDemand(int num_nodes,
                             std::span<const DemandTriplet> entries);

// Renormalizes an existing demand; idempotent up to rounding.
DemandMatrix NormalizeDemand(const DemandMatrix& d);

}  // namespace matchaug

#endif  // MATCHAUG_DEMAND_H_
