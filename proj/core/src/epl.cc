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

#include "matchaug/epl.h"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace matchaug {
namespace {

// Reusable BFS state for one worker. Stamps avoid clearing per source.
class SourceEvaluator {
 public:
  SourceEvaluator(const Graph& g, const SymmetricMatrix& d)
      : g_(g), d_(d), dist_(g.num_nodes(), 0), seen_(g.num_nodes(), 0),
        wanted_(g.num_nodes(), 0) {
    queue_.reserve(g.num_nodes());
  }

  // Sum over partners t of D(s,t) * dist(s,t), accumulated in partner order.
  double Evaluate(NodeId s) {
    const auto row = d_.row(s);
    if (row.empty()) return 0.0;
    ++stamp_;
    std::size_t remaining = 0;
    for (const auto& e : row) {
      wanted_[e.partner] = stamp_;
      ++remaining;
    }
    queue_.clear();
    queue_.push_back(s);
    seen_[s] = stamp_;
    dist_[s] = 0;
    for (std::size_t head = 0; head < queue_.size() && remaining > 0; ++head) {
      const NodeId u = queue_[head];
      for (NodeId w : g_.neighbors(u)) {
        if (seen_[w] == stamp_) continue;
        seen_[w] = stamp_;
        dist_[w] = dist_[u] + 1;
        if (wanted_[w] == stamp_) --remaining;
        queue_.push_back(w);
      }
    }
    double sum = 0.0;
    for (const auto& e : row) {
      if (seen_[e.partner] != stamp_) throw UnreachablePairError(s, e.partner);
      sum += e.value * dist_[e.partner];
    }
    return sum;
  }

 private:
  const Graph& g_;
  const SymmetricMatrix& d_;
  std::vector<int> dist_;
  std::vector<unsigned> seen_;
  std::vector<unsigned> wanted_;
  std::vector<NodeId> queue_;
  unsigned stamp_ = 0;
};

}  // namespace

double Epl(const Graph& g, const SymmetricMatrix& d, int num_threads) {
  if (g.num_nodes() != d.num_nodes()) {
    throw ValidationError("graph has " + std::to_string(g.num_nodes()) +
                          " nodes but demand has " +
                          std::to_string(d.num_nodes()));
  }
  const int n = g.num_nodes();
  std::vector<double> partial(n, 0.0);
  num_threads = std::clamp(num_threads, 1, std::max(1, n));
  if (num_threads == 1) {
    SourceEvaluator eval(g, d);
    for (NodeId s = 0; s < n; ++s) partial[s] = eval.Evaluate(s);
  } else {
    std::exception_ptr failure;
    std::mutex failure_mu;
    std::vector<std::jthread> workers;
    for (int t = 0; t < num_threads; ++t) {
      workers.emplace_back([&, t] {
        try {
          SourceEvaluator eval(g, d);
          for (NodeId s = t; s < n; s += num_threads) {
            partial[s] = eval.Evaluate(s);
          }
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    workers.clear();
    if (failure) std::rethrow_exception(failure);
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

}  // namespace matchaug
