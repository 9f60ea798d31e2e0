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

#ifndef MATCHAUG_DEADLINE_H_
#define MATCHAUG_DEADLINE_H_

#include <chrono>
#include <optional>

#include "matchaug/types.h"

namespace matchaug {

// Cooperative time limit. Long-running loops call Check(), which throws
// TimeoutError once the limit has passed. Default-constructed: no limit.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;

  static Deadline After(std::chrono::duration<double> limit) {
    Deadline d;
    d.at_ = Clock::now() +
            std::chrono::duration_cast<Clock::duration>(limit);
    return d;
  }

  bool Expired() const { return at_ && Clock::now() >= *at_; }
  void Check() const {
    if (Expired()) throw TimeoutError();
  }

 private:
  std::optional<Clock::time_point> at_;
};

}  // namespace matchaug

#endif  // MATCHAUG_DEADLINE_H_
