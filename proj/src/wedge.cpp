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

#include "fedosov/wedge.hpp"

#include <string>

#include "fedosov/errors.hpp"

namespace fedosov {

NormalizedWedge wedge_normalize(std::span<const int> indices, int dim) {
  for (int j : indices) {
    if (j < 1 || j > dim) {
      throw DomainError("wedge index " + std::to_string(j) + " out of range 1.." + std::to_string(dim));
    }
  }
  NormalizedWedge out{WedgeWord(indices.begin(), indices.end()), 1};
  // Insertion sort; every adjacent swap flips the sign.
  auto& w = out.word;
  for (std::size_t i = 1; i < w.size(); ++i) {
    for (std::size_t j = i; j > 0 && w[j - 1] >= w[j]; --j) {
      if (w[j - 1] == w[j]) return {{}, 0};
      std::swap(w[j - 1], w[j]);
      out.sign = -out.sign;
    }
  }
  return out;
}

NormalizedWedge wedge_concat(const WedgeWord& a, const WedgeWord& b, int dim) {
  if (b.empty()) return {a, 1};
  if (a.empty()) return {b, 1};
  // Merge two sorted words; moving an element of b left past k elements of a
  // contributes (-1)^k.
  NormalizedWedge out{{}, 1};
  out.word.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  int swaps = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      out.word.push_back(a[i++]);
    } else if (i < a.size() && a[i] == b[j]) {
      return {{}, 0};
    } else {
      swaps += static_cast<int>(a.size() - i);
      out.word.push_back(b[j++]);
    }
  }
  for (int x : out.word) {
    if (x < 1 || x > dim) throw DomainError("wedge index out of range");
  }
  out.sign = (swaps % 2 == 0) ? 1 : -1;
  return out;
}

}  // namespace fedosov
