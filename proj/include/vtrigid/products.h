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

#ifndef VTRIGID_PRODUCTS_H_
#define VTRIGID_PRODUCTS_H_

#include <cstdint>

#include "vtrigid/graph.h"

namespace vtrigid {

// G[H]: vertex (g,h) is g*|V(H)| + h; (g,h) ~ (g',h') iff g ~ g' in G, or
// g == g' and h ~ h' in H. Throws InputError for an empty factor and
// ResourceError if the product would exceed `max_vertices`.
Graph LexicographicProduct(const Graph& outer, const Graph& inner,
                           int64_t max_vertices = 100'000);

}  // namespace vtrigid

#endif  // VTRIGID_PRODUCTS_H_
