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


#include "matchaug/lambert_w.h"

#include <cmath>
#include <numbers>
#include <string>

#include "matchaug/types.h"

namespace matchaug {

double LambertW(double z) {
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw ValidationError("LambertW needs z > 0, got " + std::to_string(z));
  }
  const double tolerance = 1e-10 * z;
  double w = std::log1p(z);
  for (int iter = 0; iter < 200; ++iter) {
    const double ew = std::exp(w);
    const double residual = w * ew - z;
    if (std::abs(residual) <= tolerance) {
      return w - residual / (ew * (w + 1.0));  // one more step polishes w
    }
    double step = residual / (ew * (w + 1.0));
    // Halve the step until the residual shrinks (and w stays positive).
    for (int k = 0; k < 60; ++k) {
      const double next = w - step;
      if (next > 0.0 && std::abs(next * std::exp(next) - z) < std::abs(residual)) {
        break;
      }
      step *= 0.5;
    }
    if (step == 0.0) return w;
    w -= step;
  }
  return w;
}

ChordSizing SizeSuperChord(int n) {
  ChordSizing s;
  if (n < 2) {
    throw ValidationError("superchord needs n >= 8, got " + std::to_string(n));
  }
  s.x = LambertW(n * std::numbers::ln2) / std::numbers::ln2;
  // Relative slack so an exact power of two (n = 8: x = 2) is not lost to
  // rounding.
  const double ratio = n / s.x * (1.0 + 1e-12);
  int fingers = 0;
  while (std::ldexp(1.0, fingers + 1) <= ratio) ++fingers;
  s.fingers_per_block = fingers;
  s.num_blocks = 1 << fingers;
  if (n < 8 || s.num_blocks < 2) {
    throw ValidationError("superchord needs n >= 8 and at least 2 blocks, n = " +
                          std::to_string(n));
  }
  return s;
}

}  // namespace matchaug
