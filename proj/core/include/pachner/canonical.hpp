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
#include <vector>

#include "pachner/triangulation.hpp"

namespace pachner {

// Canonical text of a triangulation up to combinatorial isomorphism.
struct Signature {
  std::string text;

  auto operator<=>(const Signature&) const = default;
};

Signature signature(const Triangulation& t);

// The canonically relabelled triangulation; its to_text() is the signature.
Triangulation canonical_form(const Triangulation& t);

// Canonical relabelling map: label[v] is the new label of v (index 0 unused).
std::vector<Vertex> canonical_labeling(const Triangulation& t);

bool isomorphic(const Triangulation& a, const Triangulation& b);

// Throws ParseError or ValidationError.
Triangulation from_signature(const Signature& sig);

// Applies a relabelling (index 0 unused) to every triangle.
Triangulation relabel(const Triangulation& t, const std::vector<Vertex>& label);

}  // namespace pachner
