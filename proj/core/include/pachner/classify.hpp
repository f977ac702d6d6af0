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
#include <utility>
#include <vector>

#include "pachner/canonical.hpp"
#include "pachner/certificate.hpp"
#include "pachner/triangulation.hpp"

namespace pachner {

// Not the standard sphere, and every 3-cycle bounds a triangle.
bool is_flag(const Triangulation& t);

// Reduces to the standard sphere by removing degree-3 vertices, smallest
// label first.
bool is_stacked(const Triangulation& t);

// Stacked, and the dual tree of its clique ball has no degree-4 node.
bool is_stacked0(const Triangulation& t);

bool is_hamiltonian(const Triangulation& t);
// A Hamiltonian cycle starting at vertex 1, if one exists.
std::optional<std::vector<Vertex>> hamiltonian_cycle(const Triangulation& t);

// Iterated cutting along nonfacial 3-cycles; sorted by signature.
std::vector<Triangulation> primitive_components(const Triangulation& t);
std::vector<Signature> primitive_signatures(const Triangulation& t);

// The 3-ball whose faces are the cliques of a stacked sphere's edge graph.
struct CliqueBall {
  std::vector<Tetrahedron> tetrahedra;  // sorted
};

// Throws NotStacked.
CliqueBall clique_ball(const Triangulation& s);
// Triangles lying in exactly one tetrahedron, sorted.
std::vector<Triangle> boundary(const CliqueBall& b);

struct DualTree {
  std::vector<Tetrahedron> nodes;        // sorted
  std::vector<std::pair<int, int>> arcs;  // (i, j) with i < j, sorted

  // Sorts nodes and remaps arcs.
  static DualTree normalized(std::vector<Tetrahedron> nodes,
                             std::vector<std::pair<Tetrahedron, Tetrahedron>> arcs);

  int size() const { return static_cast<int>(nodes.size()); }
  std::vector<std::vector<int>> adjacency() const;
  std::vector<int> degrees() const;
  int max_degree() const;
  bool is_tree() const;
  bool is_path() const;
  int index_of(const Tetrahedron& t) const;

  friend bool operator==(const DualTree&, const DualTree&) = default;
};

DualTree dual_tree(const CliqueBall& b);

// Registry with predicates for any, flag, stacked, stacked0, hamiltonian.
const PredicateRegistry& default_predicates();
ClassPredicate predicate_for(SphereClass c);

bool is_gamma(const Triangulation& t);
bool is_an(const Triangulation& t);

}  // namespace pachner
