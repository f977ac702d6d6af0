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

#include "pachner/canonical.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>

namespace pachner {

namespace {

struct Scratch {
  std::vector<Vertex> label;
  std::vector<Vertex> order;
  std::vector<Vertex> ref;
  std::vector<std::uint32_t> code;
  std::vector<std::uint32_t> best_code;
  std::vector<Vertex> best_label;
};

// Labels vertices by first appearance, walking each vertex's rotation in
// sense dir starting from the neighbour it was discovered from.
void traverse(const Triangulation& t, Vertex u, int start, int dir, Scratch& s) {
  const int n = t.vertex_count();
  std::fill(s.label.begin(), s.label.end(), 0);
  s.order.clear();
  int next = 1;
  s.label[u] = next++;
  s.order.push_back(u);
  {
    auto r = t.rotation(u);
    const int d = static_cast<int>(r.size());
    for (int k = 0; k < d; ++k) {
      const Vertex w = r[((start + dir * k) % d + d) % d];
      s.label[w] = next++;
      s.ref[w] = u;
      s.order.push_back(w);
    }
  }
  for (std::size_t idx = 1; idx < s.order.size() && next <= n; ++idx) {
    const Vertex w = s.order[idx];
    auto r = t.rotation(w);
    const int d = static_cast<int>(r.size());
    int p = 0;
    while (r[p] != s.ref[w]) ++p;
    for (int k = 1; k < d; ++k) {
      const Vertex x = r[((p + dir * k) % d + d) % d];
      if (s.label[x] == 0) {
        s.label[x] = next++;
        s.ref[x] = w;
        s.order.push_back(x);
      }
    }
  }
}

void encode(const Triangulation& t, const std::vector<Vertex>& label,
            std::vector<std::uint32_t>& code) {
  const std::uint32_t N = static_cast<std::uint32_t>(t.vertex_count()) + 1;
  code.clear();
  for (const auto& tri : t.triangles()) {
    std::uint32_t a = label[tri.v[0]], b = label[tri.v[1]], c = label[tri.v[2]];
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    code.push_back((a * N + b) * N + c);
  }
  std::sort(code.begin(), code.end());
}

const std::vector<Vertex>& best_labeling(const Triangulation& t, Scratch& s) {
  const int n = t.vertex_count();
  s.label.assign(n + 1, 0);
  s.ref.assign(n + 1, 0);
  s.best_code.clear();
  int min_deg = n;
  for (Vertex v = 1; v <= n; ++v) min_deg = std::min(min_deg, t.degree(v));
  // With numeric triple order the sequence opens (1,2,3),(1,2,d+1) where d is
  // the degree of the seed vertex, so only minimum-degree seeds can win.
  for (Vertex u = 1; u <= n; ++u) {
    if (t.degree(u) != min_deg) continue;
    for (int start = 0; start < min_deg; ++start)
      for (int dir : {1, -1}) {
        traverse(t, u, start, dir, s);
        encode(t, s.label, s.code);
        if (s.best_code.empty() || s.code < s.best_code) {
          s.best_code.swap(s.code);
          s.best_label = s.label;
        }
      }
  }
  return s.best_label;
}

Scratch& scratch() {
  thread_local Scratch s;
  return s;
}

}  // namespace

std::vector<Vertex> canonical_labeling(const Triangulation& t) {
  return best_labeling(t, scratch());
}

Signature signature(const Triangulation& t) {
  Scratch& s = scratch();
  best_labeling(t, s);
  const std::uint32_t N = static_cast<std::uint32_t>(t.vertex_count()) + 1;
  std::string out = std::to_string(t.vertex_count());
  out += ':';
  char buf[16];
  for (std::size_t i = 0; i < s.best_code.size(); ++i) {
    if (i) out += '|';
    const std::uint32_t c = s.best_code[i];
    const std::uint32_t v[3] = {c / (N * N), (c / N) % N, c % N};
    for (int k = 0; k < 3; ++k) {
      if (k) out += ',';
      auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v[k]);
      out.append(buf, p);
    }
  }
  return Signature{std::move(out)};
}

Triangulation canonical_form(const Triangulation& t) {
  return relabel(t, canonical_labeling(t));
}

bool isomorphic(const Triangulation& a, const Triangulation& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  auto da = a.degree_sequence(), db = b.degree_sequence();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return signature(a) == signature(b);
}

Triangulation from_signature(const Signature& sig) {
  return Triangulation::parse(sig.text);
}

Triangulation relabel(const Triangulation& t, const std::vector<Vertex>& label) {
  std::vector<Triangle> tris;
  tris.reserve(t.triangles().size());
  for (const auto& tri : t.triangles())
    tris.push_back(Triangle::of(label[tri.v[0]], label[tri.v[1]], label[tri.v[2]]));
  return Triangulation(t.vertex_count(), std::move(tris));
}

}  // namespace pachner
