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

#include "pachner/triangulation.hpp"

#include <charconv>
#include <algorithm>
#include <cctype>

#include "pachner/errors.hpp"

namespace pachner {

std::string to_string(const Edge& e) {
  return std::to_string(e.lo) + "," + std::to_string(e.hi);
}

std::string to_string(const Triangle& t) {
  return std::to_string(t.v[0]) + "," + std::to_string(t.v[1]) + "," +
         std::to_string(t.v[2]);
}

std::string to_string(const Tetrahedron& t) {
  return std::to_string(t.v[0]) + "," + std::to_string(t.v[1]) + "," +
         std::to_string(t.v[2]) + "," + std::to_string(t.v[3]);
}

Triangulation::Triangulation(int n, std::vector<Triangle> triangles)
    : n_(n), triangles_(std::move(triangles)) {
  if (n_ < 4)
    throw ValidationError("vertex count " + std::to_string(n_) + " is below 4");
  const std::size_t want = 2 * static_cast<std::size_t>(n_) - 4;
  if (triangles_.size() != want)
    throw ValidationError("wrong triangle count: " +
                          std::to_string(triangles_.size()) + " != 2n-4 = " +
                          std::to_string(want));
  for (auto& t : triangles_) {
    std::sort(t.v.begin(), t.v.end());
    if (t.v[0] < 1 || t.v[2] > n_)
      throw ValidationError("label out of range in triangle " + to_string(t));
    if (t.v[0] == t.v[1] || t.v[1] == t.v[2])
      throw ValidationError("degenerate triangle " + to_string(t));
  }
  std::sort(triangles_.begin(), triangles_.end());
  for (std::size_t i = 1; i < triangles_.size(); ++i)
    if (triangles_[i] == triangles_[i - 1])
      throw ValidationError("duplicate triangle " + to_string(triangles_[i]));

  const std::size_t N = static_cast<std::size_t>(n_) + 1;
  auto at = [N](Vertex a, Vertex b) { return static_cast<std::size_t>(a) * N + b; };

  // Triangles on each edge; index stored at (lo,hi) and (hi,lo).
  std::vector<int> on_edge(N * N, -1);
  adj_.assign(N * N, 0);
  for (int i = 0; i < static_cast<int>(triangles_.size()); ++i) {
    const auto& v = triangles_[i].v;
    const Vertex pairs[3][2] = {{v[0], v[1]}, {v[0], v[2]}, {v[1], v[2]}};
    for (const auto& p : pairs) {
      auto& c = adj_[at(p[0], p[1])];
      if (c == 0) {
        on_edge[at(p[0], p[1])] = i;
      } else if (c == 1) {
        on_edge[at(p[1], p[0])] = i;
      } else {
        throw ValidationError("non-manifold edge " + to_string(Edge{p[0], p[1]}) +
                              " lies in more than two triangles");
      }
      ++c;
    }
  }
  std::vector<int> deg(N, 0);
  for (Vertex a = 1; a <= n_; ++a) {
    for (Vertex b = a + 1; b <= n_; ++b) {
      const auto c = adj_[at(a, b)];
      if (c == 1)
        throw ValidationError("non-manifold edge " + to_string(Edge{a, b}) +
                              " lies in only one triangle");
      if (c == 2) {
        adj_[at(a, b)] = 1;
        adj_[at(b, a)] = 1;
        ++deg[a];
        ++deg[b];
      }
    }
  }
  for (Vertex a = 1; a <= n_; ++a)
    if (deg[a] == 0)
      throw ValidationError("label gap: vertex " + std::to_string(a) + " is unused");

  // Orient triangle 0 and propagate across edges.
  std::vector<std::array<Vertex, 3>> oriented(triangles_.size());
  std::vector<char> seen(triangles_.size(), 0);
  std::vector<int> queue;
  queue.reserve(triangles_.size());
  oriented[0] = triangles_[0].v;
  seen[0] = 1;
  queue.push_back(0);
  auto has_directed = [](const std::array<Vertex, 3>& o, Vertex p, Vertex q) {
    return (o[0] == p && o[1] == q) || (o[1] == p && o[2] == q) ||
           (o[2] == p && o[0] == q);
  };
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int i = queue[head];
    const auto o = oriented[i];
    for (int k = 0; k < 3; ++k) {
      const Vertex p = o[k], q = o[(k + 1) % 3];
      const Vertex lo = std::min(p, q), hi = std::max(p, q);
      int j = on_edge[at(lo, hi)];
      if (j == i) j = on_edge[at(hi, lo)];
      const Vertex w = triangles_[j].opposite(Edge{lo, hi});
      if (!seen[j]) {
        oriented[j] = {q, p, w};
        seen[j] = 1;
        queue.push_back(j);
      } else if (!has_directed(oriented[j], q, p)) {
        throw ValidationError("non-orientable triangle set");
      }
    }
  }
  if (queue.size() != triangles_.size())
    throw ValidationError("disconnected: triangles form more than one piece");

  // succ(x, y) = z for every oriented triangle (x, y, z) and its rotations.
  std::vector<Vertex>& succ = on_edge;
  for (const auto& o : oriented) {
    succ[at(o[0], o[1])] = o[2];
    succ[at(o[1], o[2])] = o[0];
    succ[at(o[2], o[0])] = o[1];
  }
  offset_.assign(N + 1, 0);
  for (Vertex v = 1; v <= n_; ++v) offset_[v + 1] = offset_[v] + deg[v];
  rot_.resize(static_cast<std::size_t>(offset_[N]));
  for (Vertex v = 1; v <= n_; ++v) {
    Vertex first = 0;
    for (Vertex u = 1; u <= n_; ++u)
      if (adj_[at(v, u)]) {
        first = u;
        break;
      }
    int len = 0;
    Vertex cur = first;
    do {
      if (len == deg[v])
        throw ValidationError("pinched link at vertex " + std::to_string(v));
      rot_[offset_[v] + len++] = cur;
      cur = succ[at(v, cur)];
    } while (cur != first);
    if (len != deg[v])
      throw ValidationError("pinched link at vertex " + std::to_string(v) +
                            ": link is not a single cycle");
  }
}

Triangulation Triangulation::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  const char* p = text.data();
  const char* end = p + text.size();
  auto read_int = [&](int& out) {
    auto [next, ec] = std::from_chars(p, end, out);
    if (ec != std::errc() || next == p)
      throw ParseError("expected integer at offset " +
                       std::to_string(p - text.data()) + " in '" +
                       std::string(text) + "'");
    p = next;
  };
  auto expect = [&](char c) {
    if (p == end || *p != c)
      throw ParseError(std::string("expected '") + c + "' at offset " +
                       std::to_string(p - text.data()));
    ++p;
  };
  int n = 0;
  read_int(n);
  expect(':');
  std::vector<Triangle> tris;
  while (true) {
    Triangle t;
    read_int(t.v[0]);
    expect(',');
    read_int(t.v[1]);
    expect(',');
    read_int(t.v[2]);
    tris.push_back(t);
    if (p == end) break;
    expect('|');
  }
  return Triangulation(n, std::move(tris));
}

std::string Triangulation::to_text() const {
  std::string out = std::to_string(n_) + ":";
  for (std::size_t i = 0; i < triangles_.size(); ++i) {
    if (i) out += '|';
    out += to_string(triangles_[i]);
  }
  return out;
}

void Triangulation::check_vertex(Vertex v) const {
  if (v < 1 || v > n_) throw UnknownVertex("unknown vertex " + std::to_string(v));
}

int Triangulation::degree(Vertex v) const {
  check_vertex(v);
  return offset_[v + 1] - offset_[v];
}

std::vector<Vertex> Triangulation::link_cycle(Vertex v) const {
  check_vertex(v);
  auto r = rotation(v);
  std::vector<Vertex> out(r.begin(), r.end());
  // rot_ already starts at the smallest neighbour.
  if (out.back() < out[1]) std::reverse(out.begin() + 1, out.end());
  return out;
}

bool Triangulation::has_triangle(const Triangle& t) const noexcept {
  return std::binary_search(triangles_.begin(), triangles_.end(), t);
}

std::pair<Vertex, Vertex> Triangulation::edge_apices(Edge e) const {
  if (!has_edge(e)) throw UnknownEdge("unknown edge " + to_string(e));
  auto r = rotation(e.lo);
  const int d = static_cast<int>(r.size());
  for (int i = 0; i < d; ++i) {
    if (r[i] == e.hi) {
      Vertex x = r[(i + d - 1) % d], y = r[(i + 1) % d];
      return x < y ? std::pair{x, y} : std::pair{y, x};
    }
  }
  throw UnknownEdge("unknown edge " + to_string(e));
}

Vertex Triangulation::other_apex(Vertex u, Vertex v, Vertex x) const {
  auto [p, q] = edge_apices(Edge::of(u, v));
  return p == x ? q : p;
}

std::vector<Edge> Triangulation::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  for (Vertex a = 1; a <= n_; ++a)
    for (Vertex b = a + 1; b <= n_; ++b)
      if (adjacent(a, b)) out.push_back({a, b});
  return out;
}

std::vector<Vertex> Triangulation::common_neighbors(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  std::vector<Vertex> out;
  for (Vertex w : rotation(u))
    if (w != v && adjacent(v, w)) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

int Triangulation::common_neighbor_count(Vertex u, Vertex v) const {
  int k = 0;
  for (Vertex w : rotation(u)) k += (w != v && adjacent(v, w)) ? 1 : 0;
  return k;
}

std::vector<std::array<Vertex, 3>> Triangulation::nonfacial_3cycles() const {
  std::vector<std::array<Vertex, 3>> out;
  for (Vertex a = 1; a <= n_; ++a)
    for (Vertex b : rotation(a)) {
      if (b <= a) continue;
      for (Vertex c : rotation(b))
        if (c > b && adjacent(a, c) && !has_triangle(Triangle{{a, b, c}}))
          out.push_back({a, b, c});
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::array<Vertex, 4>> Triangulation::induced_4cycles() const {
  std::vector<std::array<Vertex, 4>> out;
  for (Vertex a = 1; a <= n_; ++a)
    for (Vertex b : rotation(a)) {
      if (b <= a) continue;
      for (Vertex d : rotation(a)) {
        if (d <= b || adjacent(b, d)) continue;
        for (Vertex c : rotation(b))
          if (c > a && c != d && adjacent(c, d) && !adjacent(a, c))
            out.push_back({a, b, c, d});
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Triangulation::degree_sequence() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n_));
  for (Vertex v = 1; v <= n_; ++v) out.push_back(offset_[v + 1] - offset_[v]);
  return out;
}

}  // namespace pachner
