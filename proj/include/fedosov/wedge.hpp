// Copyright 2026 The fedosov-weyl Authors
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

#pragma once

#include <span>
#include <vector>

namespace fedosov {

/// Strictly increasing 1-based indices of dq^{j1} ^ ... ^ dq^{jm}.
using WedgeWord = std::vector<int>;

struct NormalizedWedge {
  WedgeWord word;
  int sign = 0;  // -1, 0 or +1; 0 means the product vanished
};

/// Sorts a product of coordinate differentials into canonical order and
/// returns the permutation sign. Throws DomainError if an index is outside
/// 1..dim.
NormalizedWedge wedge_normalize(std::span<const int> indices, int dim);

/// Canonical product word(a) ^ word(b).
NormalizedWedge wedge_concat(const WedgeWord& a, const WedgeWord& b, int dim);

}  // namespace fedosov
