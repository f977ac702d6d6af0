// Copyright 2026 The Pachner Authors
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

#include "pachner/classify.hpp"
#include "pachner/moves.hpp"

namespace pachner {

// True iff flipping m keeps the sphere stacked: the endpoints of the removed
// edge have exactly three common neighbours. Throws NotStacked or
// IllegalFlip.
bool flip_preserves_stacked(const Triangulation& s, const FlipMove& m);

// The same test without precondition checks.
inline bool stacked_flip_fast(const Triangulation& s, Edge removed) {
  return s.common_neighbor_count(removed.lo, removed.hi) == 3;
}

// The four equivalent forms of the stacked-flip condition, evaluated
// independently for cross-checking.
struct StackedFlipConditions {
  bool link_path_length_two = false;  // link of ab in the ball is c-e-d
  bool two_tetrahedra = false;        // ab lies in exactly two tetrahedra
  bool three_common_neighbors = false;
  bool unique_extra_neighbor = false;  // one common neighbour outside {c,d}
};
StackedFlipConditions stacked_flip_conditions(const Triangulation& s, const FlipMove& m);

// Dual tree after the flip, rewritten locally from the current one. Throws
// PredicateFailed when the flip does not keep the sphere stacked.
DualTree rewrite_dual_tree(const Triangulation& s, const FlipMove& m);

// Induced subgraph on the degree-4 nodes.
DualTree degree4_core(const DualTree& t);

// Isomorphism of two forests (such as degree-4 cores).
bool forests_isomorphic(const DualTree& a, const DualTree& b);

}  // namespace pachner
