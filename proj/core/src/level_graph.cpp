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

#include "pachner/level_graph.hpp"

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "parallel.hpp"
#include "pachner/classify.hpp"
#include "pachner/errors.hpp"
#include "pachner/generators.hpp"
#include "pachner/moves.hpp"

namespace pachner {

int size_cap_from_env() {
  if (const char* env = std::getenv("PACHNER_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 4 && v <= 64) return static_cast<int>(v);
  }
  return 14;
}

namespace {

void check_size(int n, const ExploreOptions& opt) {
  if (n < 4) throw BadSize("n must be at least 4, got " + std::to_string(n));
  if (n > opt.max_n)
    throw SizeLimit("n=" + std::to_string(n) + " exceeds the size cap " +
                    std::to_string(opt.max_n));
}

// Runs produce(i, out) over [0, count) in parallel, collecting per-worker
// outputs.
template <class Produce>
std::vector<std::vector<std::string>> gather(std::size_t count, int threads, Produce&& produce) {
  std::vector<std::vector<std::string>> local(
      static_cast<std::size_t>(detail::worker_count(count, threads)));
  detail::parallel_for(count, threads,
                       [&](std::size_t i, int w) { produce(i, local[static_cast<std::size_t>(w)]); });
  return local;
}

std::vector<Signature> sorted_unique(std::vector<std::vector<std::string>>& parts) {
  std::unordered_set<std::string> seen;
  std::vector<Signature> out;
  for (auto& part : parts)
    for (auto& s : part)
      if (seen.insert(s).second) out.push_back(Signature{std::move(s)});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Signature> filter(const std::vector<Signature>& sigs, const ClassPredicate& keep,
                              int threads) {
  std::vector<char> ok(sigs.size(), 0);
  detail::parallel_for(sigs.size(), threads, [&](std::size_t i, int) {
    ok[i] = keep(from_signature(sigs[i])) ? 1 : 0;
  });
  std::vector<Signature> out;
  for (std::size_t i = 0; i < sigs.size(); ++i)
    if (ok[i]) out.push_back(sigs[i]);
  return out;
}

// Splits v into v and a new vertex n+1 joined by an edge; v keeps the link
// arc from position i to j, the new vertex takes the arc from j back to i.
Triangulation split_vertex(const Triangulation& t, Vertex v, int i, int j) {
  const Vertex x = t.vertex_count() + 1;
  auto link = t.rotation(v);
  const int d = static_cast<int>(link.size());
  std::vector<Triangle> tris;
  tris.reserve(t.triangles().size() + 2);
  for (const auto& f : t.triangles())
    if (!f.contains(v)) tris.push_back(f);
  for (int p = 0; p < d; ++p) {
    const Vertex owner = (p >= i && p < j) ? v : x;
    tris.push_back(Triangle::of(owner, link[p], link[(p + 1) % d]));
  }
  tris.push_back(Triangle::of(v, x, link[i]));
  tris.push_back(Triangle::of(v, x, link[j]));
  return Triangulation(x, std::move(tris));
}

}  // namespace

std::vector<Signature> enumerate_all(int n, const ExploreOptions& opt) {
  check_size(n, opt);
  std::unordered_set<std::string> seen;
  std::vector<Signature> frontier = {signature(delta_sphere(n))};
  seen.insert(frontier.front().text);
  std::vector<Signature> all = frontier;
  while (!frontier.empty()) {
    auto parts = gather(frontier.size(), opt.threads, [&](std::size_t i, auto& out) {
      const auto t = from_signature(frontier[i]);
      for (const auto& m : legal_flips(t)) out.push_back(signature(flip(t, m)).text);
    });
    std::vector<Signature> next;
    for (auto& part : parts)
      for (auto& s : part)
        if (seen.insert(s).second) next.push_back(Signature{std::move(s)});
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<Signature> enumerate_oracle(int n, const ExploreOptions& opt) {
  check_size(n, opt);
  std::vector<Signature> level = {signature(delta_sphere(4))};
  for (int m = 5; m <= n; ++m) {
    auto parts = gather(level.size(), opt.threads, [&](std::size_t k, auto& out) {
      const auto t = from_signature(level[k]);
      for (Vertex v = 1; v < m; ++v) {
        const int d = t.degree(v);
        for (int i = 0; i < d; ++i)
          for (int j = i + 1; j < d; ++j) out.push_back(signature(split_vertex(t, v, i, j)).text);
      }
    });
    level = sorted_unique(parts);
  }
  return level;
}

std::vector<std::vector<Signature>> enumerate_stacked_levels(int max_n, const ExploreOptions& opt) {
  check_size(max_n, opt);
  std::vector<std::vector<Signature>> levels(static_cast<std::size_t>(max_n) + 1);
  levels[4] = {signature(delta_sphere(4))};
  for (int m = 5; m <= max_n; ++m) {
    const auto& prev = levels[static_cast<std::size_t>(m) - 1];
    auto parts = gather(prev.size(), opt.threads, [&](std::size_t k, auto& out) {
      const auto t = from_signature(prev[k]);
      for (const auto& f : t.triangles()) out.push_back(signature(zero_move(t, f)).text);
    });
    levels[static_cast<std::size_t>(m)] = sorted_unique(parts);
  }
  return levels;
}

std::vector<Signature> enumerate_stacked(int n, const ExploreOptions& opt) {
  return std::move(enumerate_stacked_levels(n, opt)[static_cast<std::size_t>(n)]);
}

std::vector<Signature> enumerate_class(int n, SphereClass c, const ExploreOptions& opt) {
  switch (c) {
    case SphereClass::Any: return enumerate_all(n, opt);
    case SphereClass::Flag: return filter(enumerate_all(n, opt), is_flag, opt.threads);
    case SphereClass::Hamiltonian:
      return filter(enumerate_all(n, opt), is_hamiltonian, opt.threads);
    case SphereClass::Stacked: return enumerate_stacked(n, opt);
    case SphereClass::Stacked0:
      return filter(enumerate_stacked(n, opt), is_stacked0, opt.threads);
  }
  return {};
}

int LevelGraph::index_of(const Signature& s) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), s);
  if (it == nodes.end() || *it != s) return -1;
  return static_cast<int>(it - nodes.begin());
}

std::vector<std::vector<int>> LevelGraph::adjacency() const {
  std::vector<std::vector<int>> adj(nodes.size());
  for (auto [i, j] : arcs) {
    adj[static_cast<std::size_t>(i)].push_back(j);
    adj[static_cast<std::size_t>(j)].push_back(i);
  }
  return adj;
}

LevelGraph build_level_graph(int n, SphereClass c, const ExploreOptions& opt) {
  return build_level_graph(n, c, enumerate_class(n, c, opt), opt);
}

LevelGraph build_level_graph(int n, SphereClass c, std::vector<Signature> members,
                             const ExploreOptions& opt) {
  LevelGraph g;
  g.n = n;
  g.sphere_class = c;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  g.nodes = std::move(members);
  std::unordered_map<std::string, int> index;
  index.reserve(g.nodes.size() * 2);
  for (int i = 0; i < static_cast<int>(g.nodes.size()); ++i) index.emplace(g.nodes[i].text, i);

  // Cheap predicates screen flip targets before canonicalization; membership
  // itself is decided by the node set.
  ClassPredicate screen;
  if (c == SphereClass::Flag) screen = is_flag;
  if (c == SphereClass::Stacked) screen = is_stacked;

  const std::size_t workers = static_cast<std::size_t>(detail::worker_count(g.nodes.size(), opt.threads));
  std::vector<std::vector<std::pair<int, int>>> local(workers);
  detail::parallel_for(g.nodes.size(), opt.threads, [&](std::size_t i, int w) {
    const auto t = from_signature(g.nodes[i]);
    for (const auto& m : legal_flips(t)) {
      const auto target = flip(t, m);
      if (screen && !screen(target)) continue;
      auto it = index.find(signature(target).text);
      if (it == index.end() || it->second == static_cast<int>(i)) continue;
      const int a = static_cast<int>(i), b = it->second;
      local[static_cast<std::size_t>(w)].push_back({std::min(a, b), std::max(a, b)});
    }
  });
  for (auto& part : local) g.arcs.insert(g.arcs.end(), part.begin(), part.end());
  std::sort(g.arcs.begin(), g.arcs.end());
  g.arcs.erase(std::unique(g.arcs.begin(), g.arcs.end()), g.arcs.end());
  return g;
}

ComponentReport components(const LevelGraph& g) {
  const std::size_t n = g.nodes.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (auto [a, b] : g.arcs) {
    const int ra = find(a), rb = find(b);
    if (ra != rb) parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
  }
  // Roots are the smallest member of each component.
  std::unordered_map<int, std::size_t> size_of;
  for (std::size_t i = 0; i < n; ++i) ++size_of[find(static_cast<int>(i))];
  std::vector<std::pair<std::size_t, int>> comps;
  for (auto [root, size] : size_of) comps.push_back({size, root});
  std::sort(comps.begin(), comps.end());
  std::unordered_map<int, int> slot;
  ComponentReport r;
  r.n = g.n;
  r.sphere_class = g.sphere_class;
  r.total_count = n;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    r.component_sizes.push_back(comps[k].first);
    r.representatives.push_back(g.nodes[static_cast<std::size_t>(comps[k].second)]);
    slot[comps[k].second] = static_cast<int>(k);
  }
  r.component_of.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.component_of[i] = slot[find(static_cast<int>(i))];
  return r;
}

std::vector<int> distances_from(const LevelGraph& g, int source) {
  const auto adj = g.adjacency();
  std::vector<int> dist(g.nodes.size(), -1);
  std::vector<int> queue = {source};
  dist[static_cast<std::size_t>(source)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (int w : adj[static_cast<std::size_t>(v)])
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

std::optional<int> diameter(const LevelGraph& g) {
  int best = 0;
  for (int s = 0; s < static_cast<int>(g.nodes.size()); ++s) {
    for (int d : distances_from(g, s)) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

std::string to_dot(const LevelGraph& g) {
  std::string out = "graph level_n" + std::to_string(g.n) + "_" +
                    std::string(class_name(g.sphere_class)) + " {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    out += "  " + std::to_string(i) + " [label=\"" + std::to_string(i) + "\", sig=\"" +
           g.nodes[i].text + "\"];\n";
  for (auto [a, b] : g.arcs) out += "  " + std::to_string(a) + " -- " + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

nlohmann::json to_json(const ComponentReport& r) {
  nlohmann::json reps = nlohmann::json::array();
  for (const auto& s : r.representatives) reps.push_back(s.text);
  return {{"n", r.n},
          {"class", std::string(class_name(r.sphere_class))},
          {"total_count", r.total_count},
          {"component_sizes", r.component_sizes},
          {"representatives", reps}};
}

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace

void export_dot(const LevelGraph& g, const std::string& path) { write_file(path, to_dot(g)); }

void export_json(const ComponentReport& r, const std::string& path) {
  write_file(path, to_json(r).dump(2) + "\n");
}

std::string enumeration_text(int n, SphereClass c, const std::vector<Signature>& sigs) {
  std::string out = "# pachner-level n=" + std::to_string(n) + " class=" +
                    std::string(class_name(c)) + " count=" + std::to_string(sigs.size()) + "\n";
  for (const auto& s : sigs) out += s.text + "\n";
  return out;
}

}  // namespace pachner
