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

// Brute-force reference implementations. Slow on purpose; only used on
// small inputs.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "pachner/triangulation.hpp"

namespace oracle {

using pachner::Triangle;
using pachner::Triangulation;
using pachner::Vertex;

inline std::vector<std::vector<bool>> adjacency(const Triangulation& t) {
  const int n = t.vertex_count();
  std::vector<std::vector<bool>> a(n + 1, std::vector<bool>(n + 1, false));
  for (const auto& f : t.triangles())
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) a[f.v[i]][f.v[j]] = true;
  return a;
}

inline std::set<Triangle> triangle_set(const Triangulation& t) {
  return {t.triangles().begin(), t.triangles().end()};
}

inline Triangulation permuted(const Triangulation& t, const std::vector<Vertex>& p) {
  std::vector<Triangle> out;
  for (const auto& f : t.triangles()) out.push_back(Triangle::of(p[f.v[0]], p[f.v[1]], p[f.v[2]]));
  return Triangulation(t.vertex_count(), out);
}

inline Triangulation shuffled(const Triangulation& t, std::mt19937& rng) {
  std::vector<Vertex> p(t.vertex_count() + 1);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin() + 1, p.end(), rng);
  return permuted(t, p);
}

// Tries every relabelling.
inline bool isomorphic(const Triangulation& a, const Triangulation& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count()) return false;
  const auto target = triangle_set(b);
  std::vector<Vertex> p(n + 1);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (const auto& f : a.triangles())
      if (!target.count(Triangle::of(p[f.v[0]], p[f.v[1]], p[f.v[2]]))) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return false;
}

// Every 3-clique is a triangle, and the sphere is not the tetrahedron.
inline bool flag(const Triangulation& t) {
  const int n = t.vertex_count();
  if (n == 4) return false;
  const auto a = adjacency(t);
  const auto tris = triangle_set(t);
  for (int x = 1; x <= n; ++x)
    for (int y = x + 1; y <= n; ++y)
      for (int z = y + 1; z <= n; ++z)
        if (a[x][y] && a[y][z] && a[x][z] && !tris.count(Triangle{{x, y, z}})) return false;
  return true;
}

// Stacked iff it is built from the tetrahedron by subdividing triangles:
// search all orders of removing degree-3 vertices.
inline bool stacked(const Triangulation& t) {
  const int n = t.vertex_count();
  if (n == 4) return true;
  const auto a = adjacency(t);
  for (int v = 1; v <= n; ++v) {
    std::vector<Vertex> nb;
    for (int w = 1; w <= n; ++w)
      if (a[v][w]) nb.push_back(w);
    if (nb.size() != 3) continue;
    if (triangle_set(t).count(Triangle::of(nb[0], nb[1], nb[2]))) continue;
    std::vector<Triangle> rest;
    for (const auto& f : t.triangles())
      if (!f.contains(v)) {
        Triangle g = f;
        for (auto& x : g.v)
          if (x > v) --x;
        rest.push_back(Triangle::of(g.v[0], g.v[1], g.v[2]));
      }
    std::array<Vertex, 3> m{};
    for (int i = 0; i < 3; ++i) m[i] = nb[i] > v ? nb[i] - 1 : nb[i];
    rest.push_back(Triangle::of(m[0], m[1], m[2]));
    if (stacked(Triangulation(n - 1, rest))) return true;
  }
  return false;
}

// Backtracking over vertex orders from vertex 1.
inline bool hamiltonian(const Triangulation& t) {
  const int n = t.vertex_count();
  const auto a = adjacency(t);
  std::vector<bool> used(n + 1, false);
  used[1] = true;
  std::function<bool(int, int)> go = [&](int v, int depth) {
    if (depth == n) return static_cast<bool>(a[v][1]);
    for (int w = 2; w <= n; ++w)
      if (!used[w] && a[v][w]) {
        used[w] = true;
        if (go(w, depth + 1)) return true;
        used[w] = false;
      }
    return false;
  };
  return go(1, 1);
}

}  // namespace oracle
