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
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pachner/types.hpp"

namespace pachner {

// An immutable triangulated 2-sphere on the vertex set 1..n.
//
// Construction validates the triangle set eagerly; every other member may
// assume the sphere invariants. A rotation system is derived by orienting
// the first triangle and propagating; its global sense is arbitrary.
class Triangulation {
 public:
  // Throws ValidationError naming the first violated invariant.
  Triangulation(int n, std::vector<Triangle> triangles);

  // Parses the text form "n:a,b,c|a,b,c|...". Throws ParseError or
  // ValidationError.
  static Triangulation parse(std::string_view text);
  std::string to_text() const;

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return 3 * n_ - 6; }
  const std::vector<Triangle>& triangles() const noexcept { return triangles_; }

  int degree(Vertex v) const;
  // Neighbours of v in rotation order (internal orientation, internal start).
  std::span<const Vertex> rotation(Vertex v) const {
    return {rot_.data() + offset_[v], rot_.data() + offset_[v + 1]};
  }
  // Link of v starting at its smallest neighbour, continuing towards the
  // smaller of that neighbour's two cycle neighbours.
  std::vector<Vertex> link_cycle(Vertex v) const;

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return u >= 1 && v >= 1 && u <= n_ && v <= n_ &&
           adj_[static_cast<std::size_t>(u) * (n_ + 1) + v] != 0;
  }
  bool has_edge(Edge e) const noexcept { return adjacent(e.lo, e.hi); }
  bool has_triangle(const Triangle& t) const noexcept;

  // The two vertices x < y with abx, aby triangles. Throws UnknownEdge.
  std::pair<Vertex, Vertex> edge_apices(Edge e) const;
  // Apex of edge uv on the far side from x. Assumes uvx is a triangle.
  Vertex other_apex(Vertex u, Vertex v, Vertex x) const;

  std::vector<Edge> edges() const;
  std::vector<Vertex> common_neighbors(Vertex u, Vertex v) const;
  int common_neighbor_count(Vertex u, Vertex v) const;

  // 3-cycles of the edge graph that are not triangles, sorted.
  std::vector<std::array<Vertex, 3>> nonfacial_3cycles() const;
  // Chordless 4-cycles, each as its lexicographically smallest rotation or
  // reflection, sorted.
  std::vector<std::array<Vertex, 4>> induced_4cycles() const;

  std::vector<int> degree_sequence() const;

  friend bool operator==(const Triangulation& a, const Triangulation& b) {
    return a.n_ == b.n_ && a.triangles_ == b.triangles_;
  }

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<Triangle> triangles_;
  std::vector<int> offset_;
  std::vector<Vertex> rot_;
  std::vector<std::uint8_t> adj_;
};

}  // namespace pachner
