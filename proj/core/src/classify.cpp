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

#include "pachner/classify.hpp"

#include <algorithm>
#include <map>

#include "pachner/errors.hpp"
#include "pachner/generators.hpp"

namespace pachner {

bool is_flag(const Triangulation& t) {
  const int n = t.vertex_count();
  if (n == 4) return false;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b : t.rotation(a)) {
      if (b <= a) continue;
      for (Vertex c : t.rotation(b))
        if (c > b && t.adjacent(a, c) && !t.has_triangle(Triangle{{a, b, c}}))
          return false;
    }
  return true;
}

bool is_stacked(const Triangulation& t) {
  // Removing a degree-3 vertex of a sphere with more than four vertices is
  // always a legal 2-move and leaves the graph minus that vertex, so the
  // elimination runs on degrees alone.
  const int n = t.vertex_count();
  std::vector<int> deg = t.degree_sequence();
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  int alive = n;
  while (alive > 4) {
    int v = -1;
    for (int i = 0; i < n; ++i)
      if (!gone[i] && deg[i] == 3) {
        v = i;
        break;
      }
    if (v < 0) return false;
    gone[v] = 1;
    --alive;
    for (Vertex w : t.rotation(v + 1))
      if (!gone[w - 1]) --deg[w - 1];
  }
  return true;
}

namespace {

std::vector<int> degree_profile(const DualTree& d) { return d.degrees(); }

}  // namespace

bool is_stacked0(const Triangulation& t) {
  if (!is_stacked(t)) return false;
  auto deg = degree_profile(dual_tree(clique_ball(t)));
  return std::none_of(deg.begin(), deg.end(), [](int x) { return x >= 4; });
}

namespace {

bool extend_cycle(const Triangulation& t, std::vector<Vertex>& path, std::vector<char>& used) {
  const int n = t.vertex_count();
  const Vertex last = path.back();
  if (static_cast<int>(path.size()) == n) return t.adjacent(last, path.front());
  bool can_close = false;
  for (Vertex w : t.rotation(path.front()))
    if (!used[w]) can_close = true;
  if (!can_close) return false;
  std::vector<std::pair<int, Vertex>> cand;
  for (Vertex w : t.rotation(last)) {
    if (used[w]) continue;
    int free = 0;
    for (Vertex x : t.rotation(w)) free += used[x] ? 0 : 1;
    cand.push_back({free, w});
  }
  std::sort(cand.begin(), cand.end());
  for (auto [free, w] : cand) {
    used[w] = 1;
    path.push_back(w);
    if (extend_cycle(t, path, used)) return true;
    path.pop_back();
    used[w] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Vertex>> hamiltonian_cycle(const Triangulation& t) {
  std::vector<char> used(static_cast<std::size_t>(t.vertex_count()) + 1, 0);
  std::vector<Vertex> path = {1};
  used[1] = 1;
  if (extend_cycle(t, path, used)) return path;
  return std::nullopt;
}

bool is_hamiltonian(const Triangulation& t) { return hamiltonian_cycle(t).has_value(); }

namespace {

// Splits t along the nonfacial 3-cycle c into two spheres.
std::pair<Triangulation, Triangulation> cut(const Triangulation& t, const std::array<Vertex, 3>& c) {
  const int n = t.vertex_count();
  std::vector<int> side(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex x : c) side[x] = -1;
  Vertex seed = 1;
  while (side[seed] != 0) ++seed;
  std::vector<Vertex> stack = {seed};
  side[seed] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : t.rotation(v))
      if (side[w] == 0) {
        side[w] = 1;
        stack.push_back(w);
      }
  }
  for (Vertex v = 1; v <= n; ++v)
    if (side[v] == 0) side[v] = 2;
  auto part = [&](int which) {
    std::vector<Vertex> label(static_cast<std::size_t>(n) + 1, 0);
    Vertex next = 1;
    for (Vertex v = 1; v <= n; ++v)
      if (side[v] == which || side[v] == -1) label[v] = next++;
    std::vector<Triangle> tris;
    for (const auto& f : t.triangles()) {
      bool inside = false;
      for (Vertex x : f.v) inside = inside || side[x] == which;
      if (inside) tris.push_back(Triangle::of(label[f.v[0]], label[f.v[1]], label[f.v[2]]));
    }
    tris.push_back(Triangle::of(label[c[0]], label[c[1]], label[c[2]]));
    return Triangulation(next - 1, std::move(tris));
  };
  return {part(1), part(2)};
}

void decompose(const Triangulation& t, std::vector<Triangulation>& out) {
  auto cycles = t.nonfacial_3cycles();
  if (cycles.empty()) {
    out.push_back(t);
    return;
  }
  auto [p, q] = cut(t, cycles.front());
  decompose(p, out);
  decompose(q, out);
}

}  // namespace

std::vector<Triangulation> primitive_components(const Triangulation& t) {
  std::vector<Triangulation> parts;
  decompose(t, parts);
  std::vector<std::pair<Signature, std::size_t>> keyed;
  for (std::size_t i = 0; i < parts.size(); ++i) keyed.push_back({signature(parts[i]), i});
  std::sort(keyed.begin(), keyed.end());
  std::vector<Triangulation> out;
  for (const auto& [sig, i] : keyed) out.push_back(parts[i]);
  return out;
}

std::vector<Signature> primitive_signatures(const Triangulation& t) {
  std::vector<Triangulation> parts;
  decompose(t, parts);
  std::vector<Signature> out;
  for (const auto& p : parts) out.push_back(signature(p));
  std::sort(out.begin(), out.end());
  return out;
}

CliqueBall clique_ball(const Triangulation& s) {
  if (!is_stacked(s)) throw NotStacked("sphere is not stacked");
  CliqueBall b;
  const int n = s.vertex_count();
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex x : s.rotation(a)) {
      if (x <= a) continue;
      for (Vertex y : s.rotation(x)) {
        if (y <= x || !s.adjacent(a, y)) continue;
        for (Vertex z : s.rotation(y))
          if (z > y && s.adjacent(a, z) && s.adjacent(x, z))
            b.tetrahedra.push_back(Tetrahedron{{a, x, y, z}});
      }
    }
  std::sort(b.tetrahedra.begin(), b.tetrahedra.end());
  return b;
}

std::vector<Triangle> boundary(const CliqueBall& b) {
  std::map<Triangle, int> count;
  for (const auto& t : b.tetrahedra)
    for (Vertex x : t.v) ++count[t.face_without(x)];
  std::vector<Triangle> out;
  for (const auto& [f, k] : count)
    if (k == 1) out.push_back(f);
  return out;
}

DualTree DualTree::normalized(std::vector<Tetrahedron> nodes,
                              std::vector<std::pair<Tetrahedron, Tetrahedron>> arcs) {
  DualTree d;
  std::sort(nodes.begin(), nodes.end());
  d.nodes = std::move(nodes);
  for (const auto& [p, q] : arcs) {
    int i = d.index_of(p), j = d.index_of(q);
    if (i > j) std::swap(i, j);
    d.arcs.push_back({i, j});
  }
  std::sort(d.arcs.begin(), d.arcs.end());
  return d;
}

int DualTree::index_of(const Tetrahedron& t) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), t);
  if (it == nodes.end() || *it != t) return -1;
  return static_cast<int>(it - nodes.begin());
}

std::vector<std::vector<int>> DualTree::adjacency() const {
  std::vector<std::vector<int>> adj(nodes.size());
  for (auto [i, j] : arcs) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  return adj;
}

std::vector<int> DualTree::degrees() const {
  std::vector<int> deg(nodes.size(), 0);
  for (auto [i, j] : arcs) {
    ++deg[i];
    ++deg[j];
  }
  return deg;
}

int DualTree::max_degree() const {
  auto deg = degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

bool DualTree::is_tree() const {
  if (nodes.empty() || arcs.size() + 1 != nodes.size()) return false;
  auto adj = adjacency();
  std::vector<char> seen(nodes.size(), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == nodes.size();
}

bool DualTree::is_path() const { return is_tree() && max_degree() <= 2; }

DualTree dual_tree(const CliqueBall& b) {
  std::map<Triangle, std::vector<int>> by_face;
  for (int i = 0; i < static_cast<int>(b.tetrahedra.size()); ++i)
    for (Vertex x : b.tetrahedra[i].v) by_face[b.tetrahedra[i].face_without(x)].push_back(i);
  DualTree d;
  d.nodes = b.tetrahedra;
  for (const auto& [f, ids] : by_face)
    if (ids.size() == 2) d.arcs.push_back({std::min(ids[0], ids[1]), std::max(ids[0], ids[1])});
  std::sort(d.arcs.begin(), d.arcs.end());
  return d;
}

ClassPredicate predicate_for(SphereClass c) {
  switch (c) {
    case SphereClass::Any: return [](const Triangulation&) { return true; };
    case SphereClass::Flag: return is_flag;
    case SphereClass::Stacked: return is_stacked;
    case SphereClass::Stacked0: return is_stacked0;
    case SphereClass::Hamiltonian: return is_hamiltonian;
  }
  return nullptr;
}

const PredicateRegistry& default_predicates() {
  static const PredicateRegistry registry = [] {
    PredicateRegistry r;
    for (auto c : {SphereClass::Any, SphereClass::Flag, SphereClass::Stacked,
                   SphereClass::Stacked0, SphereClass::Hamiltonian})
      r.add(c, predicate_for(c));
    return r;
  }();
  return registry;
}

namespace {

bool same_degrees(const Triangulation& a, const Triangulation& b) {
  auto da = a.degree_sequence(), db = b.degree_sequence();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  return da == db;
}

}  // namespace

bool is_gamma(const Triangulation& t) {
  if (t.vertex_count() < 5) return false;
  const auto g = gamma(t.vertex_count());
  return same_degrees(t, g) && signature(t) == signature(g);
}

bool is_an(const Triangulation& t) {
  if (t.vertex_count() < 7) return false;
  const auto a = a_sphere(t.vertex_count());
  return same_degrees(t, a) && signature(t) == signature(a);
}

}  // namespace pachner
