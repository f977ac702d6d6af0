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

#include <optional>
#include <utility>
#include <vector>

#include "pachner/certificate.hpp"
#include "pachner/classify.hpp"
#include "pachner/tree_shape.hpp"

namespace pachner {

struct ReductionState {
  DualTree tree;
  // Smallest distance from a degree-3 node to a leaf; 0 without degree-3
  // nodes.
  int ell = 0;
  int degree3_count = 0;
  // The pair realising ell: smallest (gamma, delta) among the minimisers.
  std::optional<std::pair<Tetrahedron, Tetrahedron>> pair;
};

// Throws NotStacked0.
ReductionState reduction_state(const Triangulation& s);

// Local names for one reduction step. gamma = 1234 has degree 3, its free
// face is 234, and its neighbour towards the chosen leaf is 123x1. The link
// of 23 in the ball is the path 4-1-x1-...-xk. For k >= 2, 2 and 3 are
// ordered so that 2 x_{k-1} x_k is a triangle of the sphere.
struct ReductionFrame {
  Vertex v1 = 0, v2 = 0, v3 = 0, v4 = 0;
  std::vector<Vertex> x;  // x1..xk
  int ell = 0;
};

// nullopt when the dual tree has no degree-3 node.
std::optional<ReductionFrame> reduction_frame(const Triangulation& s);

// The flips of one reduction step, in order.
std::vector<FlipMove> reduction_moves(const ReductionFrame& f);

// Reduces a member of the degree-4-free stacked class to one whose dual
// tree is a path. Throws NotStacked0.
std::pair<Triangulation, Certificate> reduce_to_path_dual(const Triangulation& s);

// A path dual tree g1..g_{n-3} read from the end with the longer common-edge
// prefix g1..gk. The common edge is ab, g_i = a b x_i x_{i+1} for i <= k and
// g_{k+1} = b x_k x_{k+1} x_{k+2}. x holds x1..x_{k+2}.
struct DeltaFrame {
  Vertex a = 0, b = 0;
  std::vector<Vertex> x;
  int k = 0;
};

// nullopt when all tetrahedra already share an edge. Throws NotPathDual.
std::optional<DeltaFrame> delta_frame(const Triangulation& s);

// The ladder a x_k -> x_{k+1} x_{k-1}, ..., a x_2 -> x_{k+1} x_1.
std::vector<FlipMove> delta_moves(const DeltaFrame& f);

// Certificate from a path-dual stacked sphere to one isomorphic to the
// boundary of the common-edge ball. Throws NotPathDual.
Certificate path_dual_to_delta(const Triangulation& s);

// Both phases above, guarded by is_stacked0. Throws NotStacked0.
Certificate stacked_canonical_path(const Triangulation& s);

// The stacked sphere whose clique ball realises the tree: node 0 is
// 1234 and every child is glued to the next free face of its parent.
// Throws PreconditionFailed when a degree exceeds four.
Triangulation stacked_sphere_from_tree(const TreeShape& t);

// h with 4 - deg(v) leaves attached to every node.
TreeShape saturate(const TreeShape& h);

// The sphere on 3m+5 vertices realising saturate(h); isolated among stacked
// spheres.
Triangulation build_isolated_sphere(const TreeShape& h);

// As above with r <= 2 extra nodes hung on distinct leaves of saturate(h),
// giving 3m+5+r vertices.
Triangulation build_padded_sphere(const TreeShape& h, int r);

// t(floor((n-5)/3)). Throws BadSize for n < 8.
long long lower_bound_components(int n);

// One padded sphere per m-node tree, m = floor((n-5)/3); pairwise in
// different components. Throws BadSize for n < 8.
std::vector<Triangulation> isolated_witnesses(int n);

}  // namespace pachner
