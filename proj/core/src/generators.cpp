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

#include "pachner/generators.hpp"

#include "pachner/errors.hpp"

namespace pachner {

Triangulation gamma(int n) {
  if (n < 5) throw BadSize("gamma needs n >= 5, got " + std::to_string(n));
  std::vector<Triangle> tris;
  const int rim = n - 2;
  for (int i = 0; i < rim; ++i) {
    const Vertex p = 3 + i, q = 3 + (i + 1) % rim;
    tris.push_back(Triangle::of(1, p, q));
    tris.push_back(Triangle::of(2, p, q));
  }
  return Triangulation(n, std::move(tris));
}

Triangulation a_sphere(int n) {
  if (n < 7) throw BadSize("a_sphere needs n >= 7, got " + std::to_string(n));
  if (n == 7) return gamma(7);
  const Vertex a = 1, a0 = 2, a1 = 3, a2 = 4, a3 = 5, c = 6, b = 7;
  auto x = [](int i) { return 7 + i; };
  const int m = n - 7;
  std::vector<Triangle> tris = {
      Triangle::of(a, a0, a1), Triangle::of(a, a1, a2), Triangle::of(a, a2, a3),
      Triangle::of(c, a0, a1), Triangle::of(c, a1, a2), Triangle::of(c, a2, a3),
      Triangle::of(b, a0, c),  Triangle::of(b, c, a3),
      Triangle::of(a0, a, x(1)), Triangle::of(a3, a, x(1)),
      Triangle::of(a0, x(m), b), Triangle::of(a3, x(m), b)};
  for (int i = 1; i < m; ++i) {
    tris.push_back(Triangle::of(a0, x(i), x(i + 1)));
    tris.push_back(Triangle::of(a3, x(i), x(i + 1)));
  }
  return Triangulation(n, std::move(tris));
}

QkDisc q_region(int k) {
  if (k < 3) throw BadSize("q_region needs k >= 3, got " + std::to_string(k));
  QkDisc q;
  q.k = k;
  q.a = 1;
  for (int i = 0; i <= k; ++i) q.path.push_back(2 + i);
  q.c = k + 3;
  q.b = k + 4;
  q.boundary = {q.path.front(), q.a, q.path.back(), q.b};
  for (int i = 0; i < k; ++i) {
    q.triangles.push_back(Triangle::of(q.a, q.path[i], q.path[i + 1]));
    q.triangles.push_back(Triangle::of(q.c, q.path[i], q.path[i + 1]));
  }
  q.triangles.push_back(Triangle::of(q.b, q.path.front(), q.c));
  q.triangles.push_back(Triangle::of(q.b, q.c, q.path.back()));
  std::sort(q.triangles.begin(), q.triangles.end());
  return q;
}

Triangulation delta_sphere(int n) {
  if (n < 4) throw BadSize("delta_sphere needs n >= 4, got " + std::to_string(n));
  std::vector<Triangle> tris;
  for (Vertex x = 3; x < n; ++x) {
    tris.push_back(Triangle::of(1, x, x + 1));
    tris.push_back(Triangle::of(2, x, x + 1));
  }
  tris.push_back(Triangle::of(1, 2, 3));
  tris.push_back(Triangle::of(1, 2, n));
  return Triangulation(n, std::move(tris));
}

Triangulation klee(const Triangulation& s) {
  std::vector<Triangle> tris;
  Vertex next = s.vertex_count() + 1;
  for (const auto& t : s.triangles()) {
    tris.push_back(Triangle::of(t.v[0], t.v[1], next));
    tris.push_back(Triangle::of(t.v[0], t.v[2], next));
    tris.push_back(Triangle::of(t.v[1], t.v[2], next));
    ++next;
  }
  return Triangulation(next - 1, std::move(tris));
}

}  // namespace pachner
