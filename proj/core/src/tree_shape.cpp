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

#include "pachner/tree_shape.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "pachner/errors.hpp"

namespace pachner {

namespace {

using Adj = std::vector<std::vector<int>>;

Adj adjacency_of(int m, const std::vector<std::pair<int, int>>& edges) {
  Adj adj(m);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

std::string rooted_code(const Adj& adj, int root, int parent) {
  std::vector<std::string> kids;
  for (int w : adj[root])
    if (w != parent) kids.push_back(rooted_code(adj, w, root));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

// Code of the component containing `start`, restricted to `comp`.
std::string component_code(const Adj& adj, const std::vector<int>& comp) {
  if (comp.size() == 1) return "()";
  // peel leaves until one or two centres remain
  std::vector<int> deg(adj.size(), 0);
  std::vector<int> layer;
  for (int v : comp) {
    deg[v] = static_cast<int>(adj[v].size());
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::size_t left = comp.size();
  while (left > 2) {
    left -= layer.size();
    std::vector<int> next;
    for (int v : layer)
      for (int w : adj[v])
        if (--deg[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::string best;
  for (int c : layer) {
    auto code = rooted_code(adj, c, -1);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

}  // namespace

std::vector<std::pair<int, int>> TreeShape::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i < size(); ++i) out.push_back({std::min(i, parent[i]), std::max(i, parent[i])});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> TreeShape::degrees() const {
  std::vector<int> deg(parent.size(), 0);
  for (int i = 1; i < size(); ++i) {
    ++deg[i];
    ++deg[parent[i]];
  }
  return deg;
}

int TreeShape::max_degree() const {
  auto deg = degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

std::string TreeShape::canonical() const { return tree_code(size(), edges()); }

TreeShape TreeShape::from_code(const std::string& code) {
  TreeShape t;
  std::vector<int> stack;
  for (char ch : code) {
    if (ch == '(') {
      t.parent.push_back(stack.empty() ? -1 : stack.back());
      stack.push_back(t.size() - 1);
    } else if (ch == ')') {
      if (stack.empty()) throw ParseError("unbalanced tree code");
      stack.pop_back();
    } else {
      throw ParseError(std::string("bad character in tree code: ") + ch);
    }
  }
  if (!stack.empty() || t.parent.empty()) throw ParseError("unbalanced tree code");
  if (std::count(t.parent.begin(), t.parent.end(), -1) != 1)
    throw ParseError("tree code describes a forest");
  return t;
}

std::string tree_code(int m, const std::vector<std::pair<int, int>>& edges) {
  if (m == 0) return "";
  std::vector<int> all(m);
  for (int i = 0; i < m; ++i) all[i] = i;
  return component_code(adjacency_of(m, edges), all);
}

std::string forest_code(int m, const std::vector<std::pair<int, int>>& edges) {
  const Adj adj = adjacency_of(m, edges);
  std::vector<int> seen(m, 0);
  std::vector<std::string> codes;
  for (int s = 0; s < m; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (int w : adj[comp[k]])
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    codes.push_back(component_code(adj, comp));
  }
  std::sort(codes.begin(), codes.end());
  std::string out;
  for (const auto& c : codes) out += c;
  return out;
}

std::vector<TreeShape> enumerate_deg4_trees(int m, int max_m) {
  if (m < 1) throw BadSize("tree size must be positive");
  if (m > max_m) throw SizeLimit("tree size " + std::to_string(m) + " above " + std::to_string(max_m));
  std::set<std::string> level{"()"};
  for (int k = 1; k < m; ++k) {
    std::set<std::string> next;
    for (const auto& code : level) {
      const TreeShape t = TreeShape::from_code(code);
      const auto deg = t.degrees();
      for (int v = 0; v < t.size(); ++v) {
        if (deg[v] >= 4) continue;
        TreeShape u = t;
        u.parent.push_back(v);
        next.insert(u.canonical());
      }
    }
    level = std::move(next);
  }
  std::vector<TreeShape> out;
  for (const auto& code : level) out.push_back(TreeShape::from_code(code));
  return out;
}

}  // namespace pachner
