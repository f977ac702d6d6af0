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

#include <array>
#include <optional>
#include <vector>

#include "pachner/certificate.hpp"
#include "pachner/classify.hpp"

namespace pachner {

// A disc of a sphere bounded by a 4-cycle. The side is fixed by the
// interior vertex set, which must be nonempty except for transient states.
struct QuadRegion {
  std::array<Vertex, 4> boundary{};  // cyclic order
  std::vector<Vertex> interior;      // sorted

  bool has_interior(Vertex v) const;
  int corner_index(Vertex v) const;  // -1 if not a corner
};

// The side of `boundary` containing `inside`. Throws PreconditionFailed if
// `inside` lies on the cycle or the cycle is not a cycle of t.
QuadRegion quad_region(const Triangulation& t, const std::array<Vertex, 4>& boundary,
                       Vertex inside);
// Triangles meeting the interior, sorted.
std::vector<Triangle> region_triangles(const Triangulation& t, const QuadRegion& q);
// Induced boundary, all four corners of degree >= 5, nonempty interior.
bool is_proper(const Triangulation& t, const QuadRegion& q);
// Nonempty interior, all of degree four.
bool is_ordered(const Triangulation& t, const QuadRegion& q);
// For an ordered region: true if the diagonal path ends at corner p. With a
// single interior vertex both diagonals qualify.
bool diagonal_through(const Triangulation& t, const QuadRegion& q, Vertex p);
// For an ordered region: corner, interior path, opposite corner. With one
// interior vertex the diagonal through the smaller corner label is returned.
std::vector<Vertex> diagonal(const Triangulation& t, const QuadRegion& q);

struct SplitResult {
  Triangulation sphere;
  std::array<Vertex, 4> cycle{};
  Certificate certificate;
};

// An induced 4-cycle with all four degrees >= 5, after at most one flip.
// Throws NotFlag, IsGamma, UnsupportedSize (n < 8).
SplitResult find_splitting_4cycle(const Triangulation& t);

struct TransportResult {
  Triangulation sphere;
  QuadRegion alpha;  // one interior vertex fewer
  QuadRegion beta;   // one interior vertex more
  int condition = 0;  // 1 or 2
  Certificate certificate;
};

// Moves one interior vertex of alpha into beta across their common edge.
// Throws PreconditionFailed naming the violated condition.
TransportResult transport(const Triangulation& t, const QuadRegion& alpha,
                          const QuadRegion& beta, Edge vw);

enum class QkOutcome { Resolved, ReachedAn, IsGamma };

struct QkResult {
  QkOutcome outcome = QkOutcome::Resolved;
  Triangulation sphere;
  Certificate certificate;
};

// The region must be the Q_k pattern: a corner a fanned over a path
// a0..ak, a vertex c adjacent to that path and to the opposite corner b.
// Throws NotQk, NotFlag.
QkResult resolve_qk(const Triangulation& t, const QuadRegion& region);

enum class MergeOutcome { Merged, ReachedAn, IsGamma };

struct MergeResult {
  MergeOutcome outcome = MergeOutcome::Merged;
  Triangulation sphere;
  std::optional<QuadRegion> merged;
  Certificate certificate;
};

// Two ordered regions sharing the two boundary edges at u. Throws
// PreconditionFailed.
MergeResult merge_quads(const Triangulation& t, const QuadRegion& alpha,
                        const QuadRegion& beta, Vertex u);

struct OrganiseResult {
  bool reached_an = false;
  Triangulation sphere;
  QuadRegion region;
  Certificate certificate;
};

// Makes every interior vertex of q degree four, leaving the rest of the
// sphere alone. Throws NotFlag, NotProper, InternalBound.
OrganiseResult organise(const Triangulation& t, const QuadRegion& q);

// Flag-preserving flips from t to a_sphere(n) as labelled. Throws NotFlag,
// IsGamma, UnsupportedSize (n < 8).
Certificate to_canonical_an(const Triangulation& t);

}  // namespace pachner
