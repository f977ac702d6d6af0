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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "pachner/canonical.hpp"
#include "pachner/certificate.hpp"

namespace pachner {

struct ExploreOptions {
  // Largest n accepted by the enumerators.
  int max_n = 14;
  // Worker threads; 0 means one per hardware thread.
  int threads = 0;
};

// The size cap: PACHNER_MAX_N if set and valid, else 14.
int size_cap_from_env();

// Flip closure from delta_sphere(n). Sorted. Throws SizeLimit.
std::vector<Signature> enumerate_all(int n, const ExploreOptions& opt = {});
// Vertex splitting from the (n-1)-vertex list. Sorted. Throws SizeLimit.
std::vector<Signature> enumerate_oracle(int n, const ExploreOptions& opt = {});
// Zero-moves on the (n-1)-vertex stacked list. Sorted. Throws SizeLimit.
std::vector<Signature> enumerate_stacked(int n, const ExploreOptions& opt = {});
// Levels 4..max_n of the stacked enumeration; entry n holds level n.
std::vector<std::vector<Signature>> enumerate_stacked_levels(int max_n,
                                                             const ExploreOptions& opt = {});
// Members of a class at level n.
std::vector<Signature> enumerate_class(int n, SphereClass c, const ExploreOptions& opt = {});

struct LevelGraph {
  int n = 0;
  SphereClass sphere_class = SphereClass::Any;
  std::vector<Signature> nodes;            // sorted
  std::vector<std::pair<int, int>> arcs;  // (i, j), i < j, sorted, unique

  // -1 when absent.
  int index_of(const Signature& s) const;
  std::vector<std::vector<int>> adjacency() const;
};

LevelGraph build_level_graph(int n, SphereClass c, const ExploreOptions& opt = {});
// Uses the given members (sorted or not) as the node set.
LevelGraph build_level_graph(int n, SphereClass c, std::vector<Signature> members,
                             const ExploreOptions& opt = {});

struct ComponentReport {
  int n = 0;
  SphereClass sphere_class = SphereClass::Any;
  std::size_t total_count = 0;
  // Sorted ascending; representatives[i] belongs to the component of size
  // component_sizes[i] and is its smallest signature.
  std::vector<std::size_t> component_sizes;
  std::vector<Signature> representatives;
  // Component index (into component_sizes) of each node.
  std::vector<int> component_of;
};

ComponentReport components(const LevelGraph& g);

// Exact diameter; nullopt when the graph is disconnected.
std::optional<int> diameter(const LevelGraph& g);
// BFS distances from one node; -1 for unreachable.
std::vector<int> distances_from(const LevelGraph& g, int source);

std::string to_dot(const LevelGraph& g);
nlohmann::json to_json(const ComponentReport& r);
// Throw IoError.
void export_dot(const LevelGraph& g, const std::string& path);
void export_json(const ComponentReport& r, const std::string& path);

// "# pachner-level n=<n> class=<tag> count=<k>" followed by one signature
// per line.
std::string enumeration_text(int n, SphereClass c, const std::vector<Signature>& sigs);

}  // namespace pachner
