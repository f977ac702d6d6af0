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

#include <string>
#include <utility>
#include <vector>

namespace pachner {

// An unlabelled tree on nodes 0..m-1 stored by parent pointers; node 0 is
// the root and parent[0] is -1.
struct TreeShape {
  std::vector<int> parent;

  int size() const { return static_cast<int>(parent.size()); }
  std::vector<std::pair<int, int>> edges() const;
  std::vector<int> degrees() const;
  int max_degree() const;
  // Isomorphism-invariant code.
  std::string canonical() const;

  // Builds the shape rooted as in a canonical code.
  static TreeShape from_code(const std::string& code);
};

// Canonical code of a tree given by an edge list on nodes 0..m-1.
std::string tree_code(int m, const std::vector<std::pair<int, int>>& edges);
// Canonical code of a forest: sorted component codes.
std::string forest_code(int m, const std::vector<std::pair<int, int>>& edges);

// All m-node trees with maximum degree at most four, one per isomorphism
// class, sorted by canonical code. Throws SizeLimit above max_m.
std::vector<TreeShape> enumerate_deg4_trees(int m, int max_m = 18);

}  // namespace pachner
