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


#include "matchaug/exact.h"

#include <cmath>
#include <fstream>
#include <ostream>

#include "matchaug/epl.h"
#include "matchaug/io.h"

namespace matchaug {
namespace {

constexpr double kImprovement = 1e-12;

class Enumerator {
 public:
  Enumerator(const Graph& g, const SymmetricMatrix& d, const Deadline& deadline)
      : g_(g), d_(d), deadline_(deadline), mate_(g.num_nodes(), kNoNode) {}

  OptimalMatching Run() {
    Recurse();
    return std::move(best_);
  }

 private:
  void Recurse() {
    NodeId u = 0;
    const NodeId n = g_.num_nodes();
    while (u < n && mate_[u] != kNoNode) ++u;
    if (u == n) {
      Leaf();
      return;
    }
    for (NodeId v = u + 1; v < n; ++v) {
      if (mate_[v] != kNoNode) continue;
      mate_[u] = v;
      mate_[v] = u;
      stack_.emplace_back(u, v);
      Recurse();
      stack_.pop_back();
      mate_[u] = mate_[v] = kNoNode;
    }
  }

  void Leaf() {
    if ((best_.matchings_visited & 1023) == 0) deadline_.Check();
    ++best_.matchings_visited;
    const Matching m(stack_);
    const double epl = Epl(Augment(g_, m), d_);
    if (best_.matchings_visited == 1 || epl < best_.epl - kImprovement) {
      best_.epl = epl;
      best_.matching = m;
    }
  }

  const Graph& g_;
  const SymmetricMatrix& d_;
  const Deadline& deadline_;
  std::vector<NodeId> mate_;
  std::vector<NodePair> stack_;
  OptimalMatching best_;
};

std::string SenseText(LinearConstraint::Sense s) {
  switch (s) {
    case LinearConstraint::Sense::kLe:
      return "<=";
    case LinearConstraint::Sense::kGe:
      return ">=";
    case LinearConstraint::Sense::kEq:
      return "=";
  }
  return "=";
}

// Writes " 2 x - 1 y + ..." with a line break every few terms.
void WriteTerms(std::ostream& out, const std::vector<LinearTerm>& terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const LinearTerm& t = terms[i];
    if (i > 0 && i % 8 == 0) out << "\n   ";
    if (i == 0) {
      out << (t.coef < 0 ? " -" : " ");
    } else {
      out << (t.coef < 0 ? " - " : " + ");
    }
    out << FormatDouble(std::abs(t.coef)) << " " << t.var;
  }
}

}  // namespace

OptimalMatching EnumerateOptimal(const Graph& g, const SymmetricMatrix& d,
                                 int limit_n, const Deadline& deadline) {
  const int n = g.num_nodes();
  if (n <= 0 || n % 2 != 0) {
    throw ValidationError("enumeration needs an even, positive node count, "
                          "got " + std::to_string(n));
  }
  if (n > limit_n) {
    throw ValidationError("enumeration is limited to " +
                          std::to_string(limit_n) + " nodes, got " +
                          std::to_string(n) +
                          "; export the MIP (export-mip) for an external "
                          "solver instead");
  }
  if (d.num_nodes() != n) {
    throw ValidationError("graph has " + std::to_string(n) +
                          " nodes, demand has " +
                          std::to_string(d.num_nodes()));
  }
  return Enumerator(g, d, deadline).Run();
}

std::string MipDistanceVar(NodeId u, NodeId v) {
  const NodePair p(u, v);
  return "dis_" + std::to_string(p.u) + "_" + std::to_string(p.v);
}

std::string MipEdgeVar(NodeId u, NodeId v) {
  const NodePair p(u, v);
  return "a_" + std::to_string(p.u) + "_" + std::to_string(p.v);
}

std::string MipWitnessVar(NodeId u, NodeId v, NodeId w) {
  const NodePair p(u, v);
  return "y_" + std::to_string(p.u) + "_" + std::to_string(p.v) + "_" +
         std::to_string(w);
}

MipModel BuildMip(const Graph& g, const SymmetricMatrix& d, double big_m) {
  const int n = g.num_nodes();
  if (n < 4 || n % 2 != 0) {
    throw ValidationError("MIP export needs an even node count >= 4, got " +
                          std::to_string(n));
  }
  if (d.num_nodes() != n) {
    throw ValidationError("graph has " + std::to_string(n) +
                          " nodes, demand has " +
                          std::to_string(d.num_nodes()));
  }
  using Sense = LinearConstraint::Sense;
  MipModel model;
  model.num_nodes = n;
  model.big_m = big_m > 0 ? big_m : static_cast<double>(n);
  const double m = model.big_m;

  for (const WeightedPair& p : d.Pairs()) {
    model.objective.push_back({2.0 * p.weight, MipDistanceVar(p.u, p.v)});
  }
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      model.continuous.push_back(MipDistanceVar(u, v));
      model.lower_bounds.push_back(1.0);
    }
  }
  for (const NodePair& e : g.Edges()) {
    model.constraints.push_back(
        {"edge_" + std::to_string(e.u) + "_" + std::to_string(e.v),
         {{1.0, MipDistanceVar(e.u, e.v)}}, Sense::kEq, 1.0});
  }
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (g.HasEdge(u, v)) continue;
      const std::string suffix = std::to_string(u) + "_" + std::to_string(v);
      const std::string dis = MipDistanceVar(u, v);
      const std::string a = MipEdgeVar(u, v);
      model.binaries.push_back(a);
      model.constraints.push_back(
          {"act_" + suffix, {{1.0, dis}, {m - 1.0, a}}, Sense::kLe, m});
      LinearConstraint path{"path_" + suffix, {{1.0, a}}, Sense::kEq, 1.0};
      for (NodeId w = 0; w < n; ++w) {
        const std::string y = MipWitnessVar(u, v, w);
        model.binaries.push_back(y);
        if (w == u || w == v) continue;
        const std::string uw = MipDistanceVar(u, w);
        const std::string wv = MipDistanceVar(w, v);
        const std::string ws = suffix + "_" + std::to_string(w);
        model.constraints.push_back(
            {"tri_" + ws, {{1.0, dis}, {-1.0, uw}, {-1.0, wv}}, Sense::kLe,
             0.0});
        model.constraints.push_back(
            {"wit_" + ws, {{1.0, dis}, {-1.0, uw}, {-1.0, wv}, {-m, y}},
             Sense::kGe, -m});
        path.terms.push_back({1.0, y});
      }
      model.constraints.push_back(std::move(path));
    }
  }
  for (NodeId u = 0; u < n; ++u) {
    LinearConstraint deg{"deg_" + std::to_string(u), {}, Sense::kEq, 1.0};
    for (NodeId v = 0; v < n; ++v) {
      if (v != u && !g.HasEdge(u, v)) deg.terms.push_back({1.0, MipEdgeVar(u, v)});
    }
    if (deg.terms.empty()) {
      throw ValidationError("node " + std::to_string(u) +
                            " is adjacent to every other node; the model "
                            "has no matching edge for it");
    }
    model.constraints.push_back(std::move(deg));
    model.constraints.push_back({"zero_" + std::to_string(u),
                                 {{1.0, MipDistanceVar(u, u)}},
                                 Sense::kEq, 0.0});
  }
  return model;
}

void WriteLp(std::ostream& out, const MipModel& model) {
  out << "\\ matchaug augmentation model: n = " << model.num_nodes
      << ", M = " << FormatDouble(model.big_m) << "\n";
  out << "Minimize\n obj:";
  if (model.objective.empty()) {
    out << " 0 " << MipDistanceVar(0, 1);
  } else {
    WriteTerms(out, model.objective);
  }
  out << "\nSubject To\n";
  for (const LinearConstraint& c : model.constraints) {
    out << " " << c.name << ":";
    WriteTerms(out, c.terms);
    out << " " << SenseText(c.sense) << " " << FormatDouble(c.rhs) << "\n";
  }
  out << "Bounds\n";
  for (std::size_t i = 0; i < model.continuous.size(); ++i) {
    out << " " << model.continuous[i]
        << " >= " << FormatDouble(model.lower_bounds[i]) << "\n";
  }
  out << "Binary\n";
  for (std::size_t i = 0; i < model.binaries.size(); ++i) {
    out << " " << model.binaries[i];
    if (i % 8 == 7 || i + 1 == model.binaries.size()) out << "\n";
  }
  out << "End\n";
}

void ExportMip(const std::string& path, const Graph& g,
               const SymmetricMatrix& d, double big_m) {
  const MipModel model = BuildMip(g, d, big_m);
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  WriteLp(out, model);
  out.flush();
  if (!out) throw IoError("write to " + path + " failed");
}

}  // namespace matchaug
