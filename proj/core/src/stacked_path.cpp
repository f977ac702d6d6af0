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

#include "pachner/stacked_path.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "pachner/canonical.hpp"
#include "pachner/errors.hpp"
#include "pachner/generators.hpp"

namespace pachner {

namespace {

std::vector<int> bfs_parents(const std::vector<std::vector<int>>& adj, int src,
                             std::vector<int>& dist) {
  std::vector<int> par(adj.size(), -1);
  dist.assign(adj.size(), -1);
  std::vector<int> queue{src};
  dist[src] = 0;
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (int w : adj[queue[q]])
      if (dist[w] < 0) {
        dist[w] = dist[queue[q]] + 1;
        par[w] = queue[q];
        queue.push_back(w);
      }
  return par;
}

Vertex other_vertex(const Tetrahedron& t, std::initializer_list<Vertex> skip) {
  for (Vertex v : t.v)
    if (std::find(skip.begin(), skip.end(), v) == skip.end()) return v;
  return 0;
}

bool has_face(const Tetrahedron& t, Vertex a, Vertex b, Vertex c) {
  return t.contains(a) && t.contains(b) && t.contains(c);
}

std::tuple<int, int> measure(const ReductionState& s) { return {s.degree3_count, s.ell}; }

void run_reduction(PathBuilder& pb) {
  ReductionState st = reduction_state(pb.current());
  while (st.pair) {
    const auto frame = reduction_frame(pb.current());
    if (!frame) throw InternalError("reduction frame missing");
    for (const auto& m : reduction_moves(*frame)) pb.flip(m);
    ReductionState next = reduction_state(pb.current());
    if (!(measure(next) < measure(st)))
      throw InternalError("reduction step did not decrease (degree-3 count, ell)");
    st = std::move(next);
  }
}

int prefix_length(const std::vector<Tetrahedron>& order) {
  std::vector<Vertex> inter(order[0].v.begin(), order[0].v.end());
  int k = 1;
  for (std::size_t i = 1; i < order.size(); ++i) {
    std::vector<Vertex> next;
    for (Vertex v : inter)
      if (order[i].contains(v)) next.push_back(v);
    if (next.size() < 2) break;
    inter = std::move(next);
    ++k;
  }
  return k;
}

void run_delta(PathBuilder& pb) {
  int last_k = 0;
  while (auto f = delta_frame(pb.current())) {
    if (f->k <= last_k) throw InternalError("common-edge prefix did not grow");
    last_k = f->k;
    for (const auto& m : delta_moves(*f)) pb.flip(m);
  }
  const int n = pb.current().vertex_count();
  if (!isomorphic(pb.current(), delta_sphere(n)))
    throw InternalError("ladder ended away from the common-edge sphere");
}

bool stacked_with_path_dual(const Triangulation& t) {
  return is_stacked(t) && dual_tree(clique_ball(t)).is_path();
}

}  // namespace

ReductionState reduction_state(const Triangulation& s) {
  if (!is_stacked(s)) throw NotStacked0("sphere is not stacked");
  ReductionState st;
  st.tree = dual_tree(clique_ball(s));
  if (st.tree.max_degree() > 3) throw NotStacked0("dual tree has a degree-4 node");
  const auto adj = st.tree.adjacency();
  const auto deg = st.tree.degrees();
  std::optional<std::tuple<int, Tetrahedron, Tetrahedron>> best;
  for (int g = 0; g < st.tree.size(); ++g) {
    if (deg[g] != 3) continue;
    ++st.degree3_count;
    std::vector<int> dist;
    bfs_parents(adj, g, dist);
    for (int d = 0; d < st.tree.size(); ++d) {
      if (deg[d] != 1) continue;
      std::tuple<int, Tetrahedron, Tetrahedron> cand{dist[d], st.tree.nodes[g], st.tree.nodes[d]};
      if (!best || cand < *best) best = cand;
    }
  }
  if (best) {
    st.ell = std::get<0>(*best);
    st.pair = {std::get<1>(*best), std::get<2>(*best)};
  }
  return st;
}

std::optional<ReductionFrame> reduction_frame(const Triangulation& s) {
  const ReductionState st = reduction_state(s);
  if (!st.pair) return std::nullopt;
  const DualTree& t = st.tree;
  const auto adj = t.adjacency();
  const int g = t.index_of(st.pair->first), d = t.index_of(st.pair->second);
  std::vector<int> dist;
  const auto par = bfs_parents(adj, d, dist);
  const Tetrahedron& gamma = t.nodes[g];
  const Tetrahedron& gamma1 = t.nodes[par[g]];

  ReductionFrame f;
  f.ell = st.ell;
  f.v4 = other_vertex(gamma, {gamma1.v[0], gamma1.v[1], gamma1.v[2], gamma1.v[3]});
  for (Vertex v : gamma.v) {
    const Triangle face = gamma.face_without(v);
    bool shared = false;
    for (int w : adj[g])
      shared = shared || has_face(t.nodes[w], face.v[0], face.v[1], face.v[2]);
    if (!shared) f.v1 = v;
  }
  if (f.v1 == 0 || f.v1 == f.v4) throw InternalError("degree-3 node without a single free face");
  std::vector<Vertex> rest;
  for (Vertex v : gamma.v)
    if (v != f.v1 && v != f.v4) rest.push_back(v);
  f.v2 = rest[0];
  f.v3 = rest[1];

  // the link of 23 beyond 4-1
  Vertex prev = f.v1;
  int cur = par[g];
  while (true) {
    const Vertex w = other_vertex(t.nodes[cur], {f.v2, f.v3, prev});
    f.x.push_back(w);
    int next = -1;
    for (int u : adj[cur])
      if (has_face(t.nodes[u], f.v2, f.v3, w)) next = u;
    if (next < 0) break;
    prev = w;
    cur = next;
  }
  const std::size_t k = f.x.size();
  if (k >= 2) {
    const Vertex a = f.x[k - 2], b = f.x[k - 1];
    if (!s.has_triangle(Triangle::of(f.v2, a, b))) {
      std::swap(f.v2, f.v3);
      if (!s.has_triangle(Triangle::of(f.v2, a, b)))
        throw InternalError("neither 2 x_{k-1} x_k nor 3 x_{k-1} x_k is a triangle");
    }
  }
  return f;
}

std::vector<FlipMove> reduction_moves(const ReductionFrame& f) {
  const int k = static_cast<int>(f.x.size());
  auto X = [&](int i) { return i == 0 ? f.v1 : f.x[i - 1]; };
  std::vector<FlipMove> out;
  for (int i = 1; i <= k - 1; ++i)
    out.push_back({Edge::of(f.v2, X(k - i)), Edge::of(X(k), X(k - i - 1))});
  out.push_back({Edge::of(f.v2, f.v3), Edge::of(f.v4, X(k))});
  return out;
}

std::pair<Triangulation, Certificate> reduce_to_path_dual(const Triangulation& s) {
  if (!is_stacked0(s)) throw NotStacked0("sphere is not in the degree-4-free stacked class");
  PathBuilder pb(s, SphereClass::Stacked0, is_stacked0);
  run_reduction(pb);
  return {pb.current(), pb.certificate()};
}

std::optional<DeltaFrame> delta_frame(const Triangulation& s) {
  if (!is_stacked(s)) throw NotPathDual("sphere is not stacked");
  const DualTree t = dual_tree(clique_ball(s));
  if (!t.is_path()) throw NotPathDual("dual tree is not a path");
  if (t.size() <= 2) return std::nullopt;
  const auto adj = t.adjacency();
  int end = 0;
  while (adj[end].size() != 1) ++end;
  std::vector<Tetrahedron> order;
  for (int prev = -1, cur = end; cur >= 0;) {
    order.push_back(t.nodes[cur]);
    int next = -1;
    for (int w : adj[cur])
      if (w != prev) next = w;
    prev = cur;
    cur = next;
  }
  std::vector<Tetrahedron> rev(order.rbegin(), order.rend());
  int k = prefix_length(order);
  const int kr = prefix_length(rev);
  if (kr > k || (kr == k && rev[0] < order[0])) {
    order = std::move(rev);
    k = kr;
  }
  if (k == t.size()) return std::nullopt;

  std::vector<Vertex> common(order[0].v.begin(), order[0].v.end());
  for (int i = 1; i < k; ++i)
    std::erase_if(common, [&](Vertex v) { return !order[i].contains(v); });
  if (common.size() != 2) throw InternalError("common-edge prefix shorter than three");

  DeltaFrame f;
  f.k = k;
  const Tetrahedron& next = order[k];
  f.b = next.contains(common[0]) ? common[0] : common[1];
  f.a = f.b == common[0] ? common[1] : common[0];
  const Vertex a = f.a, b = f.b;
  f.x.push_back(other_vertex(order[0], {a, b, order[1].v[0], order[1].v[1], order[1].v[2],
                                        order[1].v[3]}));
  for (int i = 0; i + 1 < k; ++i)
    for (Vertex v : order[i].v)
      if (v != a && v != b && order[i + 1].contains(v)) f.x.push_back(v);
  f.x.push_back(other_vertex(order[k - 1], {a, b, f.x.back()}));
  f.x.push_back(other_vertex(next, {order[k - 1].v[0], order[k - 1].v[1], order[k - 1].v[2],
                                    order[k - 1].v[3]}));
  if (static_cast<int>(f.x.size()) != k + 2) throw InternalError("bad ladder labelling");
  return f;
}

std::vector<FlipMove> delta_moves(const DeltaFrame& f) {
  auto X = [&](int i) { return f.x[i - 1]; };
  std::vector<FlipMove> out;
  for (int j = f.k; j >= 2; --j)
    out.push_back({Edge::of(f.a, X(j)), Edge::of(X(f.k + 1), X(j - 1))});
  return out;
}

Certificate path_dual_to_delta(const Triangulation& s) {
  if (!stacked_with_path_dual(s)) throw NotPathDual("dual tree is not a path");
  PathBuilder pb(s, SphereClass::Stacked0, stacked_with_path_dual);
  run_delta(pb);
  return pb.certificate();
}

Certificate stacked_canonical_path(const Triangulation& s) {
  if (!is_stacked0(s)) throw NotStacked0("sphere is not in the degree-4-free stacked class");
  PathBuilder pb(s, SphereClass::Stacked0, is_stacked0);
  run_reduction(pb);
  run_delta(pb);
  return pb.certificate();
}

Triangulation stacked_sphere_from_tree(const TreeShape& t) {
  const int m = t.size();
  if (m < 1) throw PreconditionFailed("empty tree");
  if (t.max_degree() > 4) throw PreconditionFailed("tree degree above four");
  std::vector<std::vector<int>> kids(m);
  int root = -1;
  for (int i = 0; i < m; ++i) {
    if (t.parent[i] < 0)
      root = i;
    else
      kids[t.parent[i]].push_back(i);
  }
  std::vector<Tetrahedron> tet(m);
  std::vector<Triangle> parent_face(m);
  tet[root] = Tetrahedron{{1, 2, 3, 4}};
  Vertex fresh = 5;
  std::vector<int> queue{root};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const int u = queue[q];
    std::size_t next = 0;
    for (Vertex v : tet[u].v) {
      const Triangle face = tet[u].face_without(v);
      if (u != root && face == parent_face[u]) continue;
      if (next == kids[u].size()) break;
      const int c = kids[u][next++];
      parent_face[c] = face;
      tet[c] = Tetrahedron::of(face.v[0], face.v[1], face.v[2], fresh++);
      queue.push_back(c);
    }
  }
  return Triangulation(m + 3, boundary(CliqueBall{tet}));
}

TreeShape saturate(const TreeShape& h) {
  TreeShape g = h;
  const auto deg = h.degrees();
  for (int v = 0; v < h.size(); ++v)
    for (int i = deg[v]; i < 4; ++i) g.parent.push_back(v);
  return g;
}

Triangulation build_isolated_sphere(const TreeShape& h) {
  return stacked_sphere_from_tree(saturate(h));
}

Triangulation build_padded_sphere(const TreeShape& h, int r) {
  if (r < 0 || r > 2) throw PreconditionFailed("padding must be 0, 1 or 2");
  TreeShape g = saturate(h);
  const auto deg = g.degrees();
  int added = 0;
  for (int v = 0; v < static_cast<int>(deg.size()) && added < r; ++v)
    if (deg[v] == 1) {
      g.parent.push_back(v);
      ++added;
    }
  return stacked_sphere_from_tree(g);
}

long long lower_bound_components(int n) {
  if (n < 8) throw BadSize("lower bound needs n >= 8");
  return static_cast<long long>(enumerate_deg4_trees((n - 5) / 3).size());
}

std::vector<Triangulation> isolated_witnesses(int n) {
  if (n < 8) throw BadSize("witnesses need n >= 8");
  const int m = (n - 5) / 3;
  std::vector<Triangulation> out;
  for (const auto& h : enumerate_deg4_trees(m)) out.push_back(build_padded_sphere(h, n - 3 * m - 5));
  return out;
}

}  // namespace pachner
