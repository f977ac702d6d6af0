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

#include "pachner/stacked_flip.hpp"

#include <algorithm>
#include <map>

#include "pachner/errors.hpp"
#include "pachner/tree_shape.hpp"

namespace pachner {

namespace {

void require_legal(const Triangulation& s, const FlipMove& m) {
  if (!s.has_edge(m.remove))
    throw IllegalFlip("missing-triangles", "edge " + to_string(m.remove) + " absent");
  const auto [x, y] = s.edge_apices(m.remove);
  if (Edge::of(x, y) != m.insert)
    throw IllegalFlip("missing-triangles", "apices of " + to_string(m.remove) + " are not " +
                                               to_string(m.insert));
  if (s.has_edge(m.insert))
    throw IllegalFlip("diagonal-exists", to_string(m.insert));
}

}  // namespace

bool flip_preserves_stacked(const Triangulation& s, const FlipMove& m) {
  if (!is_stacked(s)) throw NotStacked("sphere is not stacked");
  require_legal(s, m);
  return stacked_flip_fast(s, m.remove);
}

StackedFlipConditions stacked_flip_conditions(const Triangulation& s, const FlipMove& m) {
  if (!is_stacked(s)) throw NotStacked("sphere is not stacked");
  require_legal(s, m);
  const Vertex a = m.remove.lo, b = m.remove.hi;
  const Vertex c = m.insert.lo, d = m.insert.hi;
  const CliqueBall ball = clique_ball(s);

  std::vector<Tetrahedron> around;
  for (const auto& t : ball.tetrahedra)
    if (t.contains(a) && t.contains(b)) around.push_back(t);

  StackedFlipConditions out;
  out.two_tetrahedra = around.size() == 2;
  out.three_common_neighbors = s.common_neighbor_count(a, b) == 3;
  int extra = 0;
  for (Vertex v : s.common_neighbors(a, b)) extra += (v != c && v != d) ? 1 : 0;
  out.unique_extra_neighbor = extra == 1;

  // walk the link of ab from c; each tetrahedron abxy is an edge xy
  int steps = 0;
  Vertex prev = 0, cur = c;
  while (cur != d && steps <= static_cast<int>(around.size())) {
    Vertex next = 0;
    for (const auto& t : around) {
      if (!t.contains(cur)) continue;
      Vertex w = 0;
      for (Vertex v : t.v)
        if (v != a && v != b && v != cur) w = v;
      if (w != prev) {
        next = w;
        break;
      }
    }
    if (next == 0) break;
    prev = cur;
    cur = next;
    ++steps;
  }
  out.link_path_length_two = cur == d && steps == 2;
  return out;
}

DualTree rewrite_dual_tree(const Triangulation& s, const FlipMove& m) {
  if (!flip_preserves_stacked(s, m))
    throw PredicateFailed("flip " + to_string(m.remove) + " does not keep the sphere stacked");
  const Vertex a = m.remove.lo, b = m.remove.hi;
  const Vertex c = m.insert.lo, d = m.insert.hi;
  Vertex e = 0;
  for (Vertex v : s.common_neighbors(a, b))
    if (v != c && v != d) e = v;

  const DualTree old = dual_tree(clique_ball(s));
  const Tetrahedron alpha = Tetrahedron::of(a, b, c, e);
  const Tetrahedron beta = Tetrahedron::of(a, b, d, e);
  const Tetrahedron gamma = Tetrahedron::of(a, c, d, e);
  const Tetrahedron delta = Tetrahedron::of(b, c, d, e);
  const int ia = old.index_of(alpha), ib = old.index_of(beta);
  if (ia < 0 || ib < 0) throw InternalError("flip tetrahedra missing from the ball");

  std::vector<Tetrahedron> nodes;
  for (const auto& t : old.nodes)
    if (t != alpha && t != beta) nodes.push_back(t);
  nodes.push_back(gamma);
  nodes.push_back(delta);

  std::vector<std::pair<Tetrahedron, Tetrahedron>> arcs;
  arcs.push_back({gamma, delta});
  for (auto [i, j] : old.arcs) {
    const bool hi = i == ia || i == ib, hj = j == ia || j == ib;
    if (hi && hj) continue;
    if (!hi && !hj) {
      arcs.push_back({old.nodes[i], old.nodes[j]});
      continue;
    }
    const Tetrahedron& nu = hi ? old.nodes[j] : old.nodes[i];
    if (nu.meet(gamma) == 3)
      arcs.push_back({nu, gamma});
    else if (nu.meet(delta) == 3)
      arcs.push_back({nu, delta});
    else
      throw InternalError("neighbour " + to_string(nu) + " fits neither new tetrahedron");
  }
  return DualTree::normalized(std::move(nodes), std::move(arcs));
}

DualTree degree4_core(const DualTree& t) {
  const auto deg = t.degrees();
  std::vector<Tetrahedron> nodes;
  for (int i = 0; i < t.size(); ++i)
    if (deg[i] == 4) nodes.push_back(t.nodes[i]);
  std::vector<std::pair<Tetrahedron, Tetrahedron>> arcs;
  for (auto [i, j] : t.arcs)
    if (deg[i] == 4 && deg[j] == 4) arcs.push_back({t.nodes[i], t.nodes[j]});
  return DualTree::normalized(std::move(nodes), std::move(arcs));
}

bool forests_isomorphic(const DualTree& a, const DualTree& b) {
  return a.size() == b.size() && a.arcs.size() == b.arcs.size() &&
         forest_code(a.size(), a.arcs) == forest_code(b.size(), b.arcs);
}

}  // namespace pachner
