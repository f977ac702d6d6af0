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

#include "pachner/flag_path.hpp"

#include <algorithm>
#include <string>

#include "pachner/errors.hpp"
#include "pachner/generators.hpp"

namespace pachner {

bool QuadRegion::has_interior(Vertex v) const {
  return std::binary_search(interior.begin(), interior.end(), v);
}

int QuadRegion::corner_index(Vertex v) const {
  for (int i = 0; i < 4; ++i)
    if (boundary[i] == v) return i;
  return -1;
}

namespace {

enum class Res { Done, ReachedAn, IsGamma };

void add_vertex(std::vector<Vertex>& s, Vertex v) {
  s.insert(std::lower_bound(s.begin(), s.end(), v), v);
}

void remove_vertex(std::vector<Vertex>& s, Vertex v) {
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it != s.end() && *it == v) s.erase(it);
}

std::vector<Vertex> interior_nbrs(const Triangulation& t, const QuadRegion& q, Vertex x) {
  std::vector<Vertex> out;
  for (Vertex y : t.rotation(x))
    if (q.has_interior(y)) out.push_back(y);
  std::sort(out.begin(), out.end());
  return out;
}

bool on_cycle(const std::array<Vertex, 4>& c, Vertex v) {
  return std::find(c.begin(), c.end(), v) != c.end();
}

std::vector<Vertex> flood(const Triangulation& t, const std::array<Vertex, 4>& cycle,
                          Vertex start) {
  std::vector<char> seen(t.vertex_count() + 1, 0);
  for (Vertex v : cycle) seen[v] = 1;
  std::vector<Vertex> out{start};
  seen[start] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Vertex w : t.rotation(out[i]))
      if (!seen[w]) {
        seen[w] = 1;
        out.push_back(w);
      }
  std::sort(out.begin(), out.end());
  return out;
}

// Neighbours of corner p inside q, from the preceding corner to the next.
std::vector<Vertex> corner_fan(const Triangulation& t, const QuadRegion& q, Vertex p) {
  const int i = q.corner_index(p);
  const Vertex prev = q.boundary[(i + 3) % 4], next = q.boundary[(i + 1) % 4];
  const auto link = t.link_cycle(p);
  const int len = static_cast<int>(link.size());
  const int ip = static_cast<int>(std::find(link.begin(), link.end(), prev) - link.begin());
  for (int dir : {1, -1}) {
    std::vector<Vertex> arc{prev};
    bool ok = true;
    for (int k = 1; k < len; ++k) {
      const Vertex x = link[((ip + dir * k) % len + len) % len];
      arc.push_back(x);
      if (x == next) break;
      if (!q.has_interior(x)) {
        ok = false;
        break;
      }
    }
    if (ok && arc.back() == next && arc.size() > 2) return arc;
  }
  throw InternalError("corner " + std::to_string(p) + " has no fan inside the region");
}

Vertex other_corner(const QuadRegion& q, Vertex x, Vertex not_this) {
  const int i = q.corner_index(x);
  const Vertex p = q.boundary[(i + 1) % 4], r = q.boundary[(i + 3) % 4];
  return p == not_this ? r : p;
}

Vertex single(const std::vector<Vertex>& v, const char* what) {
  if (v.size() != 1) throw InternalError(std::string("expected a single ") + what);
  return v[0];
}

struct Ctx {
  PathBuilder& pb;
  int n;
  const Triangulation& t() const { return pb.current(); }
  void flip(Vertex a, Vertex b, Vertex c, Vertex d) { pb.flip(a, b, c, d); }
  bool at_an() const { return isomorphic(pb.current(), a_sphere(n)); }
};

// Condition 1: w ends both diagonals. Condition 2: v ends alpha's, w ends
// beta's.
void do_transport(Ctx& cx, QuadRegion& al, QuadRegion& be, Vertex v, Vertex w, int cond) {
  const Triangulation& t = cx.t();
  if (cond == 1) {
    const Vertex i1 = single(interior_nbrs(t, al, w), "interior neighbour of w");
    auto rest = interior_nbrs(t, al, i1);
    const Vertex i2 = single(rest, "diagonal successor");
    const Vertex s = other_corner(al, w, v);
    const Vertex j1 = single(interior_nbrs(t, be, w), "interior neighbour of w in beta");
    const Vertex s2 = other_corner(be, w, v);
    cx.flip(v, w, i1, j1);
    cx.flip(i1, s, w, i2);
    cx.flip(w, j1, i1, s2);
    cx.flip(i1, i2, w, v);
    remove_vertex(al.interior, i1);
    add_vertex(be.interior, i1);
  } else {
    const Vertex i1 = single(interior_nbrs(t, al, v), "interior neighbour of v");
    const Vertex i2 = single(interior_nbrs(t, al, i1), "diagonal successor");
    const Vertex y = other_corner(al, v, w);
    const Vertex j1 = single(interior_nbrs(t, be, w), "interior neighbour of w in beta");
    const Vertex y2 = other_corner(be, w, v);
    cx.flip(v, w, i1, j1);
    cx.flip(i1, y, v, i2);
    cx.flip(w, j1, i1, y2);
    cx.flip(i1, i2, v, w);
    remove_vertex(al.interior, i1);
    add_vertex(be.interior, i1);
  }
}

struct QkRoles {
  Vertex a = 0, b = 0, c = 0;
  std::vector<Vertex> path;  // a0..ak
};

std::optional<QkRoles> match_qk(const Triangulation& t, const QuadRegion& q) {
  if (q.interior.size() < 3) return std::nullopt;
  for (int i = 0; i < 4; ++i) {
    const Vertex a = q.boundary[i], b = q.boundary[(i + 2) % 4];
    const auto cs = interior_nbrs(t, q, b);
    if (cs.size() != 1) continue;
    const Vertex c = cs[0];
    std::vector<Vertex> fan;
    try {
      fan = corner_fan(t, q, a);
    } catch (const InternalError&) {
      continue;
    }
    const int k = static_cast<int>(fan.size()) - 1;
    if (k < 3 || static_cast<int>(q.interior.size()) != k) continue;
    bool ok = true;
    std::vector<Vertex> inner;
    for (int j = 0; j <= k && ok; ++j) {
      ok = t.adjacent(c, fan[j]) && fan[j] != c;
      if (j > 0 && j < k) {
        ok = ok && t.degree(fan[j]) == 4;
        inner.push_back(fan[j]);
      }
    }
    if (!ok) continue;
    inner.push_back(c);
    std::sort(inner.begin(), inner.end());
    if (inner != q.interior) continue;
    return QkRoles{a, b, c, fan};
  }
  return std::nullopt;
}

Res resolve_q(Ctx& cx, const QkRoles& r) {
  const auto& P = r.path;
  const int k = static_cast<int>(P.size()) - 1;
  const Vertex a = r.a, b = r.b, c = r.c;
  if (k > 4) {
    for (int i = 0; i <= k - 4; ++i) cx.flip(P[i], c, b, P[i + 1]);
    const Res first = resolve_q(cx, QkRoles{a, b, c, {P[k - 3], P[k - 2], P[k - 1], P[k]}});
    if (first != Res::Done) return first;
    QuadRegion q4{{P[k], a, P[k - 4], b}, {P[k - 3], P[k - 2], P[k - 1], c}};
    std::sort(q4.interior.begin(), q4.interior.end());
    const auto m4 = match_qk(cx.t(), q4);
    if (!m4 || m4->path.size() != 5) throw InternalError("expected a Q_4 pattern after the Q_3 step");
    return resolve_q(cx, *m4);
  }
  if (k < 3) throw InternalError("Q_k with k < 3");

  const Vertex a0 = P[0], ak = P[k];
  std::vector<Vertex> xs{a};
  Vertex prev0 = P[1], prevk = P[k - 1];
  Vertex X = 0;
  bool reached_b = false;
  for (int guard = 0;; ++guard) {
    if (guard > cx.n) throw InternalError("probe around the region did not stop");
    const Triangulation& t = cx.t();
    const Vertex cur = xs.back();
    const Vertex nx = t.other_apex(a0, cur, prev0);
    const Vertex ny = t.other_apex(ak, cur, prevk);
    if (nx != ny) {
      X = nx;
      break;
    }
    if (nx == b) {
      if (xs.size() < 2) throw InternalError("probe reached b in one step");
      reached_b = true;
      break;
    }
    prev0 = prevk = cur;
    xs.push_back(nx);
  }

  if (reached_b) {
    if (k == 4) {
      QuadRegion al{{a0, a, ak, c}, {P[1], P[2], P[3]}};
      std::sort(al.interior.begin(), al.interior.end());
      QuadRegion be = quad_region(cx.t(), al.boundary, b);
      do_transport(cx, al, be, a0, a, 2);
    }
    if (!cx.at_an()) throw InternalError("probe closed up away from A_n");
    return Res::ReachedAn;
  }

  const int ell = static_cast<int>(xs.size()) - 1;
  auto xm = [&](int j) { return j < 0 ? P[1] : xs[j]; };
  for (int j = ell; j >= 0; --j) cx.flip(a0, xs[j], X, xm(j - 1));
  if (k == 3) {
    cx.flip(P[1], c, a0, P[2]);
    cx.flip(a, P[2], P[1], P[3]);
  } else {
    cx.flip(P[1], c, a0, P[2]);
    cx.flip(P[2], c, a0, P[3]);
    cx.flip(P[3], a, P[2], P[4]);
    cx.flip(P[2], a, P[1], P[4]);
  }
  for (int j = 0; j <= ell; ++j) cx.flip(X, xm(j - 1), a0, xs[j]);
  return Res::Done;
}

QuadRegion union_region(const std::array<Vertex, 4>& cycle, const QuadRegion& x,
                        const QuadRegion& y, Vertex extra) {
  QuadRegion q{cycle, x.interior};
  for (Vertex v : y.interior) add_vertex(q.interior, v);
  add_vertex(q.interior, extra);
  return q;
}

struct MergeOut {
  Res res = Res::Done;
  QuadRegion merged;
};

MergeOut merge_in(Ctx& cx, QuadRegion al, QuadRegion be, Vertex u) {
  const int ia = al.corner_index(u), ib = be.corner_index(u);
  if (ia < 0 || ib < 0) throw InternalError("merge corner missing");
  const Vertex v = al.boundary[(ia + 1) % 4], w = al.boundary[(ia + 3) % 4];
  Vertex a = al.boundary[(ia + 2) % 4], b = be.boundary[(ib + 2) % 4];

  for (int round = 0; round < 3; ++round) {
    const bool au = diagonal_through(cx.t(), al, u), bu = diagonal_through(cx.t(), be, u);
    if (au && bu) {
      if (a == b) return {Res::IsGamma, {}};
      QuadRegion m = union_region({v, a, w, b}, al, be, u);
      if (!is_ordered(cx.t(), m)) throw InternalError("merged region is not ordered");
      return {Res::Done, m};
    }
    if (!au && !bu) {
      if (a == b) return {Res::IsGamma, {}};
      while (al.interior.size() > 1) do_transport(cx, al, be, u, v, 1);
      continue;
    }
    if (!au) {
      std::swap(al, be);
      std::swap(a, b);
    }
    // alpha's diagonal ends at u, beta's runs v..w
    if (a == b && al.interior.size() == 1) return {Res::IsGamma, {}};
    while (be.interior.size() > 2) do_transport(cx, be, al, w, u, 2);
    if (a == b) {
      if (!cx.at_an()) throw InternalError("merge with a = b did not reach A_n");
      return {Res::ReachedAn, {}};
    }
    const Vertex i1 = single(interior_nbrs(cx.t(), al, u), "interior neighbour of u");
    QuadRegion q3{{v, i1, w, b}, be.interior};
    add_vertex(q3.interior, u);
    const auto m = match_qk(cx.t(), q3);
    if (!m || m->path.size() != 4) throw InternalError("expected a Q_3 pattern in the merge");
    const Res r = resolve_q(cx, *m);
    if (r != Res::Done) return {r, {}};
    QuadRegion merged = union_region({v, a, w, b}, al, be, u);
    if (!is_ordered(cx.t(), merged)) throw InternalError("merged region is not ordered");
    return {Res::Done, merged};
  }
  throw InternalError("merge did not settle");
}

std::vector<Vertex> common_interior(const Triangulation& t, const QuadRegion& q, Vertex x,
                                    Vertex y) {
  std::vector<Vertex> out;
  for (Vertex z : q.interior)
    if (t.adjacent(x, z) && t.adjacent(y, z)) out.push_back(z);
  return out;
}

Res organise_in(Ctx& cx, const QuadRegion& q);

// Sub-region of q bounded by x - y0 - a - y1 on a's side.
QuadRegion fan_quad(const Triangulation& t, Vertex x, Vertex y0, Vertex a, Vertex y1,
                    const std::vector<Vertex>& fan, std::size_t i0, std::size_t i1) {
  QuadRegion s{{x, y0, a, y1}, {}};
  if (i1 > i0 + 1) {
    s.interior = flood(t, s.boundary, fan[i0 + 1]);
  } else {
    const Vertex z = t.other_apex(y0, y1, a);
    if (z != x) s.interior = flood(t, s.boundary, z);
  }
  return s;
}

// Rearranges q = (a, c, b, d) until a, b or c, d share an interior
// neighbour; returns q rotated so that its corners 0 and 2 do.
std::pair<Res, QuadRegion> pair_corners(Ctx& cx, const QuadRegion& q) {
  const Vertex a = q.boundary[0], c = q.boundary[1], b = q.boundary[2], d = q.boundary[3];
  const QuadRegion rotated{{c, b, d, a}, q.interior};
  const long limit = 10L * cx.n * cx.n;
  for (long step = 0;; ++step) {
    if (step > limit) throw InternalBound("organise exceeded its step bound");
    const Triangulation& t = cx.t();
    if (!common_interior(t, q, a, b).empty()) return {Res::Done, q};
    if (!common_interior(t, q, c, d).empty()) return {Res::Done, rotated};

    auto fan_of_a = [&] {
      auto f = corner_fan(cx.t(), q, a);  // d .. c
      std::reverse(f.begin(), f.end());
      return f;
    };
    std::vector<Vertex> path = fan_of_a();
    std::vector<QuadRegion> quads;
    bool restart = false;
    std::size_t cur = 0;
    while (cur + 1 < path.size()) {
      const std::size_t m = path.size() - 1;
      const std::size_t top = cur == 0 ? m - 1 : m;
      std::optional<QuadRegion> best;
      std::size_t best_l = 0;
      for (std::size_t l = top; l > cur && !best; --l) {
        for (Vertex x : cx.t().common_neighbors(path[cur], path[l])) {
          if (x == a || cx.t().adjacent(a, x)) continue;
          if (!(q.has_interior(x) || x == b)) continue;
          if (x == b) return {Res::Done, q};
          QuadRegion s = fan_quad(cx.t(), x, path[cur], a, path[l], path, cur, l);
          if (!best || s.interior.size() > best->interior.size()) best = s;
        }
        best_l = l;
      }
      if (!best) throw InternalError("no outer common neighbour along the fan");
      if (best->interior.empty()) {
        cx.flip(path[cur], path[best_l], a, best->boundary[0]);
        restart = true;
        break;
      }
      const Res r = organise_in(cx, *best);
      if (r != Res::Done) return {r, q};
      quads.push_back(*best);
      const Vertex valley = path[best_l];
      path = fan_of_a();
      cur = static_cast<std::size_t>(std::find(path.begin(), path.end(), valley) - path.begin());
      if (cur >= path.size()) throw InternalError("valley left the fan of a");
    }
    if (restart) continue;
    if (quads.size() < 2) throw InternalError("fewer than two fan quadrilaterals");

    // every diagonal should run valley to valley
    const std::size_t p = quads.size();
    for (std::size_t i = 0; i < p; ++i) {
      if (quads[i].interior.size() < 2 || !diagonal_through(cx.t(), quads[i], a)) continue;
      const std::size_t tgt = i + 1 < p ? i + 1 : i - 1;
      const Vertex y = tgt == i + 1 ? quads[i].boundary[3] : quads[i].boundary[1];
      while (quads[i].interior.size() > 1) {
        if (quads[tgt].interior.size() >= 2 && diagonal_through(cx.t(), quads[tgt], a))
          do_transport(cx, quads[i], quads[tgt], y, a, 1);
        else
          do_transport(cx, quads[i], quads[tgt], a, y, 2);
      }
    }

    path = fan_of_a();
    const Vertex x1 = quads[0].boundary[0], y1 = quads[0].boundary[3];
    const std::size_t j = static_cast<std::size_t>(std::find(path.begin(), path.end(), y1) - path.begin());
    if (j < 2 || j >= path.size()) throw InternalError("first valley too close to c");
    const auto link = cx.t().link_cycle(y1);
    const std::size_t len = link.size();
    const std::size_t ix = static_cast<std::size_t>(std::find(link.begin(), link.end(), x1) - link.begin());
    const Vertex l1 = link[(ix + 1) % len], l2 = link[(ix + len - 1) % len];
    const Vertex y11 = l1 == path[j - 1] ? l2 : l1;
    for (std::size_t i = j; i >= 2; --i) cx.flip(x1, path[i], path[i - 1], y11);
    cx.flip(path[0], path[1], a, x1);
  }
}

Res organise_in(Ctx& cx, const QuadRegion& q) {
  if (is_ordered(cx.t(), q)) return Res::Done;
  if (q.interior.size() <= 2) throw InternalError("small region is not ordered");
  if (!is_proper(cx.t(), q)) throw InternalError("sub-region is not proper");

  auto [res, qq] = pair_corners(cx, q);
  if (res != Res::Done) return res;
  const Vertex a = qq.boundary[0], b = qq.boundary[2];
  Vertex c = qq.boundary[1], d = qq.boundary[3];
  const Triangulation& t = cx.t();
  const auto common = common_interior(t, qq, a, b);
  Vertex e = 0;
  for (Vertex x : common)
    if (t.degree(x) >= 5) {
      e = x;
      break;
    }
  if (e == 0) {
    if (!is_ordered(t, qq)) throw InternalError("degree-4 common neighbours but region not ordered");
    return Res::Done;
  }

  std::array<Vertex, 4> c1{e, a, c, b}, c2{e, a, d, b};
  std::vector<Vertex> s1, s2;
  for (Vertex x : interior_nbrs(t, qq, c))
    if (x != e) s1 = flood(t, c1, x);
  for (Vertex x : interior_nbrs(t, qq, d))
    if (x != e) s2 = flood(t, c2, x);

  // triangles at e on each side
  const auto link = t.link_cycle(e);
  const int len = static_cast<int>(link.size());
  const int pa = static_cast<int>(std::find(link.begin(), link.end(), a) - link.begin());
  int count_c = 0;
  bool c_side_forward = false;
  for (int k = 1; k < len; ++k) {
    const Vertex x = link[(pa + k) % len];
    if (x == b) {
      count_c = k;
      break;
    }
    if (x == c || std::binary_search(s1.begin(), s1.end(), x)) c_side_forward = true;
  }
  if (!c_side_forward) count_c = len - count_c;
  const int count_d = len - count_c;
  if (count_c >= 3 && count_d < 3) {
    std::swap(c, d);
    std::swap(c1, c2);
    std::swap(s1, s2);
  }
  const QuadRegion q1{c1, s1}, q2{c2, s2};

  if (!q1.interior.empty()) {
    Res r = organise_in(cx, q1);
    if (r != Res::Done) return r;
    r = organise_in(cx, q2);
    if (r != Res::Done) return r;
    const MergeOut m = merge_in(cx, q1, q2, e);
    if (m.res == Res::IsGamma) throw InternalError("merge inside a sphere that is not the double cone");
    if (m.res == Res::ReachedAn) return m.res;
    return Res::Done;
  }
  const Res r = organise_in(cx, q2);
  if (r != Res::Done) return r;
  if (cx.t().degree(e) == 4) {
    if (!is_ordered(cx.t(), qq)) throw InternalError("region not ordered after organising");
    return Res::Done;
  }
  const auto roles = match_qk(cx.t(), qq);
  if (!roles) throw InternalError("expected a Q_k pattern");
  return resolve_q(cx, *roles);
}

std::array<Vertex, 4> link4(const Triangulation& t, Vertex v) {
  const auto l = t.link_cycle(v);
  return {l[0], l[1], l[2], l[3]};
}

bool four_cycle_good(const Triangulation& t, const std::array<Vertex, 4>& c) {
  if (t.adjacent(c[0], c[2]) || t.adjacent(c[1], c[3])) return false;
  for (Vertex v : c)
    if (t.degree(v) < 5) return false;
  return true;
}

std::array<Vertex, 4> split_in(Ctx& cx) {
  const Triangulation& t = cx.t();
  const int n = t.vertex_count();
  Vertex v4 = 0;
  for (Vertex v = 1; v <= n && !v4; ++v)
    if (t.degree(v) == 4) v4 = v;
  if (v4) {
    std::array<Vertex, 4> cyc = link4(t, v4);
    std::vector<Vertex> inside{v4};
    int start = -1;
    Vertex best = 0;
    for (int i = 0; i < 4; ++i)
      if (t.degree(cyc[i]) == 4 && (best == 0 || cyc[i] < best)) {
        best = cyc[i];
        start = i;
      }
    if (start >= 0) {
      for (int end : {start, (start + 2) % 4}) {
        while (t.degree(cyc[end]) == 4) {
          const Vertex x = cyc[end];
          Vertex out = 0;
          for (Vertex y : t.rotation(x))
            if (!on_cycle(cyc, y) && std::find(inside.begin(), inside.end(), y) == inside.end())
              out = y;
          if (out == 0 || out == cyc[(end + 2) % 4]) throw IsGamma("sphere is the double cone");
          inside.push_back(x);
          cyc[end] = out;
        }
      }
    }
    if (!four_cycle_good(t, cyc)) throw InternalError("grown 4-cycle is not proper");
    return cyc;
  }
  Vertex w = 0;
  for (Vertex v = 1; v <= n && !w; ++v)
    if (t.degree(v) == 5) w = v;
  if (!w) throw InternalError("flag sphere without degree 4 or 5 vertices");
  auto nb = t.link_cycle(w);
  std::sort(nb.begin(), nb.end());
  const Vertex u = nb[0];
  const auto [a, b] = t.edge_apices(Edge::of(u, w));
  for (Vertex x : t.common_neighbors(a, b))
    if (x != u && x != w) {
      const std::array<Vertex, 4> cyc{x, a, w, b};
      if (four_cycle_good(t, cyc)) return cyc;
    }
  cx.flip(u, w, a, b);
  const auto cyc = link4(cx.t(), w);
  if (!four_cycle_good(cx.t(), cyc)) throw InternalError("link after the flip is not proper");
  return cyc;
}

std::pair<QuadRegion, QuadRegion> sides(const Triangulation& t, const std::array<Vertex, 4>& c) {
  Vertex first = 0;
  for (Vertex v = 1; v <= t.vertex_count() && !first; ++v)
    if (!on_cycle(c, v)) first = v;
  QuadRegion q{c, flood(t, c, first)};
  Vertex second = 0;
  for (Vertex v = 1; v <= t.vertex_count() && !second; ++v)
    if (!on_cycle(c, v) && !q.has_interior(v)) second = v;
  if (!second) throw InternalError("4-cycle does not separate");
  return {q, QuadRegion{c, flood(t, c, second)}};
}

// Absorbs degree-4 corners into q (which must be ordered).
void grow(Ctx& cx, QuadRegion& q, QuadRegion& r) {
  for (int guard = 0; guard <= cx.n; ++guard) {
    const Triangulation& t = cx.t();
    int at = -1;
    for (int i = 0; i < 4; ++i)
      if (t.degree(q.boundary[i]) == 4 && (at < 0 || q.boundary[i] < q.boundary[at])) at = i;
    if (at < 0) return;
    const Vertex p = q.boundary[at];
    const Vertex out = single(interior_nbrs(t, r, p), "outer neighbour of a degree-4 corner");
    if (r.interior.size() == 1) throw InternalError("growth emptied the other side");
    q.boundary[at] = out;
    r.boundary[r.corner_index(p)] = out;
    add_vertex(q.interior, p);
    remove_vertex(r.interior, out);
  }
  throw InternalError("growth did not stop");
}

// Both sides ordered with crossing diagonals: shift vertices until one side
// holds two.
void finish_crossing(Ctx& cx, QuadRegion& q, QuadRegion& r) {
  if (std::min(q.interior.size(), r.interior.size()) < 2)
    throw InternalError("one side has a single vertex");
  QuadRegion* src = q.interior.size() <= r.interior.size() ? &q : &r;
  QuadRegion* dst = src == &q ? &r : &q;
  while (src->interior.size() > 2) {
    const auto dg = diagonal(cx.t(), *src);
    const Vertex v = std::min(dg.front(), dg.back());
    const int iv = src->corner_index(v);
    const Vertex w1 = src->boundary[(iv + 1) % 4], w2 = src->boundary[(iv + 3) % 4];
    const Vertex w = std::min(w1, w2);
    do_transport(cx, *src, *dst, v, w, 2);
  }
}

}  // namespace

QuadRegion quad_region(const Triangulation& t, const std::array<Vertex, 4>& boundary,
                       Vertex inside) {
  for (int i = 0; i < 4; ++i)
    if (!t.adjacent(boundary[i], boundary[(i + 1) % 4]))
      throw PreconditionFailed("boundary is not a cycle of the sphere");
  if (on_cycle(boundary, inside)) throw PreconditionFailed("inner vertex lies on the boundary");
  return QuadRegion{boundary, flood(t, boundary, inside)};
}

std::vector<Triangle> region_triangles(const Triangulation& t, const QuadRegion& q) {
  std::vector<Triangle> out;
  for (const auto& f : t.triangles())
    if (q.has_interior(f.v[0]) || q.has_interior(f.v[1]) || q.has_interior(f.v[2]))
      out.push_back(f);
  return out;
}

bool is_proper(const Triangulation& t, const QuadRegion& q) {
  return !q.interior.empty() && four_cycle_good(t, q.boundary);
}

bool is_ordered(const Triangulation& t, const QuadRegion& q) {
  if (q.interior.empty()) return false;
  for (Vertex v : q.interior)
    if (t.degree(v) != 4) return false;
  return true;
}

bool diagonal_through(const Triangulation& t, const QuadRegion& q, Vertex p) {
  return interior_nbrs(t, q, p).size() == 1;
}

std::vector<Vertex> diagonal(const Triangulation& t, const QuadRegion& q) {
  if (!is_ordered(t, q)) throw PreconditionFailed("region is not ordered");
  Vertex start = 0;
  for (Vertex p : q.boundary)
    if (diagonal_through(t, q, p) && (start == 0 || p < start)) start = p;
  std::vector<Vertex> out{start};
  Vertex prev = start, cur = interior_nbrs(t, q, start)[0];
  while (true) {
    out.push_back(cur);
    Vertex next = 0;
    for (Vertex x : interior_nbrs(t, q, cur))
      if (x != prev) next = x;
    if (next == 0) break;
    prev = cur;
    cur = next;
  }
  const int is = q.corner_index(start);
  out.push_back(q.boundary[(is + 2) % 4]);
  return out;
}

SplitResult find_splitting_4cycle(const Triangulation& t) {
  if (t.vertex_count() < 8) throw UnsupportedSize("splitting needs n >= 8");
  if (!is_flag(t)) throw NotFlag("sphere is not flag");
  if (is_gamma(t)) throw IsGamma("sphere is the double cone");
  PathBuilder pb(t, SphereClass::Flag, is_flag);
  Ctx cx{pb, t.vertex_count()};
  const auto cyc = split_in(cx);
  return {pb.current(), cyc, pb.certificate()};
}

TransportResult transport(const Triangulation& t, const QuadRegion& alpha,
                          const QuadRegion& beta, Edge vw) {
  if (!is_flag(t)) throw NotFlag("sphere is not flag");
  if (!is_ordered(t, alpha) || !is_ordered(t, beta))
    throw PreconditionFailed("both regions must be ordered");
  for (Vertex x : alpha.interior)
    if (beta.has_interior(x)) throw PreconditionFailed("interiors overlap");
  auto shares = [&](const QuadRegion& q) {
    const int i = q.corner_index(vw.lo), j = q.corner_index(vw.hi);
    return i >= 0 && j >= 0 && (i - j + 4) % 4 != 2;
  };
  if (!shares(alpha) || !shares(beta)) throw PreconditionFailed("edge is not on both boundaries");
  if (alpha.interior.size() < 2) throw PreconditionFailed("alpha needs at least two interior vertices");

  PathBuilder pb(t, SphereClass::Flag, is_flag);
  Ctx cx{pb, t.vertex_count()};
  QuadRegion al = alpha, be = beta;
  std::string why;
  for (Vertex w : {vw.lo, vw.hi}) {
    if (diagonal_through(t, al, w) && diagonal_through(t, be, w)) {
      if (t.degree(w) < 5) {
        why += "condition (1): degree of " + std::to_string(w) + " below 5; ";
        continue;
      }
      do_transport(cx, al, be, vw.other(w), w, 1);
      return {pb.current(), al, be, 1, pb.certificate()};
    }
  }
  for (Vertex v : {vw.lo, vw.hi}) {
    const Vertex w = vw.other(v);
    if (diagonal_through(t, al, v) && diagonal_through(t, be, w)) {
      if (t.degree(v) < 5 || t.degree(w) < 6) {
        why += "condition (2): degrees of " + std::to_string(v) + ", " + std::to_string(w) +
               " below 5, 6; ";
        continue;
      }
      do_transport(cx, al, be, v, w, 2);
      return {pb.current(), al, be, 2, pb.certificate()};
    }
  }
  if (why.empty()) why = "diagonals meet neither condition";
  throw PreconditionFailed("transport: " + why);
}

QkResult resolve_qk(const Triangulation& t, const QuadRegion& region) {
  if (!is_flag(t)) throw NotFlag("sphere is not flag");
  PathBuilder pb(t, SphereClass::Flag, is_flag);
  if (is_gamma(t)) return {QkOutcome::IsGamma, t, pb.certificate()};
  const auto roles = match_qk(t, region);
  if (!roles || t.adjacent(region.boundary[0], region.boundary[2]) ||
      t.adjacent(region.boundary[1], region.boundary[3]))
    throw NotQk("region is not an induced Q_k");
  Ctx cx{pb, t.vertex_count()};
  const Res r = resolve_q(cx, *roles);
  return {r == Res::ReachedAn ? QkOutcome::ReachedAn : QkOutcome::Resolved, pb.current(),
          pb.certificate()};
}

MergeResult merge_quads(const Triangulation& t, const QuadRegion& alpha, const QuadRegion& beta,
                        Vertex u) {
  if (!is_flag(t)) throw NotFlag("sphere is not flag");
  if (!is_ordered(t, alpha) || !is_ordered(t, beta))
    throw PreconditionFailed("both regions must be ordered");
  for (Vertex x : alpha.interior)
    if (beta.has_interior(x)) throw PreconditionFailed("interiors overlap");
  const int ia = alpha.corner_index(u), ib = beta.corner_index(u);
  if (ia < 0 || ib < 0) throw PreconditionFailed("u is not a corner of both regions");
  const Vertex v = alpha.boundary[(ia + 1) % 4], w = alpha.boundary[(ia + 3) % 4];
  const Vertex bv = beta.boundary[(ib + 1) % 4], bw = beta.boundary[(ib + 3) % 4];
  if (!((v == bv && w == bw) || (v == bw && w == bv)))
    throw PreconditionFailed("regions do not share both edges at u");
  PathBuilder pb(t, SphereClass::Flag, is_flag);
  Ctx cx{pb, t.vertex_count()};
  QuadRegion b2 = beta;
  if (v != bv) std::swap(b2.boundary[(ib + 1) % 4], b2.boundary[(ib + 3) % 4]);
  const MergeOut m = merge_in(cx, alpha, b2, u);
  MergeResult out{MergeOutcome::Merged, pb.current(), std::nullopt, pb.certificate()};
  if (m.res == Res::IsGamma) out.outcome = MergeOutcome::IsGamma;
  else if (m.res == Res::ReachedAn) out.outcome = MergeOutcome::ReachedAn;
  else out.merged = m.merged;
  return out;
}

OrganiseResult organise(const Triangulation& t, const QuadRegion& q) {
  if (!is_flag(t)) throw NotFlag("sphere is not flag");
  if (!is_ordered(t, q) && !is_proper(t, q)) throw NotProper("region is not proper");
  PathBuilder pb(t, SphereClass::Flag, is_flag);
  Ctx cx{pb, t.vertex_count()};
  const Res r = organise_in(cx, q);
  return {r == Res::ReachedAn, pb.current(), q, pb.certificate()};
}

Certificate to_canonical_an(const Triangulation& t) {
  const int n = t.vertex_count();
  if (n < 8) throw UnsupportedSize("flag paths need n >= 8");
  if (!is_flag(t)) throw NotFlag("sphere is not flag");
  if (is_gamma(t)) throw IsGamma("sphere is the double cone");
  PathBuilder pb(t, SphereClass::Flag, is_flag);
  Ctx cx{pb, n};
  if (cx.at_an()) return pb.certificate();

  const auto cyc = split_in(cx);
  auto [q, r] = sides(cx.t(), cyc);
  Res res = organise_in(cx, q);
  if (res == Res::Done) {
    grow(cx, q, r);
    res = organise_in(cx, r);
  }
  if (res == Res::Done) {
    grow(cx, q, r);
    grow(cx, r, q);
    finish_crossing(cx, q, r);
  }
  if (!cx.at_an()) throw InternalError("flag path ended away from A_n");
  return pb.certificate();
}

}  // namespace pachner
