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


// Ground truth for small instances: exhaustive search over perfect
// matchings, and a mixed-integer model for external solvers.

#ifndef MATCHAUG_EXACT_H_
#define MATCHAUG_EXACT_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "matchaug/deadline.h"
#include "matchaug/demand.h"
#include "matchaug/graph.h"
#include "matchaug/matching.h"

namespace matchaug {

struct OptimalMatching {
  Matching matching;
  double epl = 0.0;
  std::uint64_t matchings_visited = 0;  // (n - 1)!!
};

inline constexpr int kDefaultEnumerationLimit = 12;

// Minimizes EPL(G + M) over all perfect matchings M of the complete graph.
// The lowest free node is paired with each free partner in ascending order,
// so leaves are visited in lexicographic order; the first minimizer wins.
// Throws ValidationError for odd n or n > limit_n.
OptimalMatching EnumerateOptimal(const Graph& g, const SymmetricMatrix& d,
                                 int limit_n = kDefaultEnumerationLimit,
                                 const Deadline& deadline = Deadline());

struct LinearTerm {
  double coef = 0.0;
  std::string var;
};

struct LinearConstraint {
  enum class Sense { kLe, kGe, kEq };
  std::string name;
  std::vector<LinearTerm> terms;
  Sense sense = Sense::kEq;
  double rhs = 0.0;
};

// Variables:
//   dis_u_v  (u <= v)  distance, continuous; >= 1 for u != v
//   a_u_v    (u < v, not an edge of G)  matching edge chosen
//   y_u_v_w  (u < v, not an edge of G, any w)  shortest u-v path uses w
// The objective sums 2 D(u,v) dis_u_v over the demand support (both
// directions of each pair).
struct MipModel {
  int num_nodes = 0;
  double big_m = 0.0;
  std::vector<LinearTerm> objective;
  std::vector<LinearConstraint> constraints;
  std::vector<std::string> continuous;  // with lower bound in lower_bounds
  std::vector<double> lower_bounds;
  std::vector<std::string> binaries;
};

// big_m <= 0 selects n. Needs n >= 4 even and d on the same nodes.
//
// Per non-adjacent pair {u, v}:
//   act_u_v:      dis_u_v + (M - 1) a_u_v <= M
//   tri_u_v_w:    dis_u_v - dis_u_w - dis_w_v <= 0         (w != u, v)
//   wit_u_v_w:    dis_u_v - dis_u_w - dis_w_v - M y_u_v_w >= -M
//   path_u_v:     a_u_v + sum_{w != u, v} y_u_v_w = 1
// Per infrastructure edge: edge_u_v: dis_u_v = 1.
// Per node: deg_u: sum of a_u_v over non-adjacent v = 1; zero_u: dis_u_u = 0.
MipModel BuildMip(const Graph& g, const SymmetricMatrix& d, double big_m = 0);

// CPLEX LP text: Minimize / Subject To / Bounds / Binary / End.
void WriteLp(std::ostream& out, const MipModel& model);
void ExportMip(const std::string& path, const Graph& g,
               const SymmetricMatrix& d, double big_m = 0);

std::string MipDistanceVar(NodeId u, NodeId v);
std::string MipEdgeVar(NodeId u, NodeId v);
std::string MipWitnessVar(NodeId u, NodeId v, NodeId w);

}  // namespace matchaug

#endif  // MATCHAUG_EXACT_H_
