// Copyright 2026 The vtrigid Authors.
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

#include "vtrigid/products.h"

#include <string>
#include <vector>

#include "vtrigid/errors.h"

namespace vtrigid {

Graph LexicographicProduct(const Graph& outer, const Graph& inner,
                           int64_t max_vertices) {
  const int64_t a = outer.num_vertices();
  const int64_t b = inner.num_vertices();
  if (a == 0 || b == 0) throw InputError("lexicographic product of an empty graph");
  if (a * b > max_vertices) {
    throw ResourceError("lexicographic product has " + std::to_string(a * b) +
                        " vertices, limit is " + std::to_string(max_vertices));
  }
  std::vector<Edge> edges;
  edges.reserve(outer.num_edges() * b * b + a * inner.num_edges());
  for (const Edge& e : outer.edges()) {
    for (int64_t h = 0; h < b; ++h) {
      for (int64_t h2 = 0; h2 < b; ++h2) {
        edges.emplace_back(static_cast<int>(e.first * b + h),
                           static_cast<int>(e.second * b + h2));
      }
    }
  }
  for (int64_t g = 0; g < a; ++g) {
    for (const Edge& f : inner.edges()) {
      edges.emplace_back(static_cast<int>(g * b + f.first),
                         static_cast<int>(g * b + f.second));
    }
  }
  return Graph(static_cast<int>(a * b), std::move(edges));
}

}  // namespace vtrigid
