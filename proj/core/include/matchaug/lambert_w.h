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


#ifndef MATCHAUG_LAMBERT_W_H_
#define MATCHAUG_LAMBERT_W_H_

namespace matchaug {

// Principal branch of the Lambert W function: the w > 0 with w * e^w = z.
// Damped Newton from ln(1 + z) until |w e^w - z| <= 1e-10 * z. Throws
// ValidationError for z <= 0 or non-finite z.
double LambertW(double z);

struct ChordSizing {
  // Ideal block size W(n ln 2) / ln 2, satisfying x = log2(n / x).
  double x = 0.0;
  // Number of blocks: the largest power of two <= n / x.
  int num_blocks = 0;
  // log2(num_blocks).
  int fingers_per_block = 0;
};

// Throws ValidationError when fewer than 2 blocks result.
ChordSizing SizeSuperChord(int n);

}  // namespace matchaug

#endif  // MATCHAUG_LAMBERT_W_H_
