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

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pachner/canonical.hpp"
#include "pachner/moves.hpp"

namespace pachner {

enum class SphereClass { Any, Flag, Stacked, Stacked0, Hamiltonian };

// "any", "flag", "stacked", "stacked0", "hamiltonian".
std::string_view class_name(SphereClass c);
// Also accepts "all" for Any. Throws ParseError.
SphereClass parse_class(std::string_view s);

struct Certificate {
  SphereClass sphere_class = SphereClass::Any;
  Signature start;
  std::string start_labeling;
  std::vector<FlipMove> moves;
  Signature end;
};

nlohmann::json to_json(const Certificate& c);
// Throws ParseError on malformed input.
Certificate certificate_from_json(const nlohmann::json& j);

using ClassPredicate = std::function<bool(const Triangulation&)>;

class PredicateRegistry {
 public:
  void add(SphereClass c, ClassPredicate p) { table_[c] = std::move(p); }
  const ClassPredicate* find(SphereClass c) const {
    auto it = table_.find(c);
    return it == table_.end() ? nullptr : &it->second;
  }

 private:
  std::map<SphereClass, ClassPredicate> table_;
};

struct VerifyReport {
  bool ok = true;
  // State index: 0 is the start, i is the state after i moves.
  std::optional<std::size_t> failed_step;
  std::string reason;
};

// Replays the certificate from its start labelling.
VerifyReport verify_certificate(const Certificate& c, const PredicateRegistry& preds);
// As above, throwing ReplayError on failure.
void require_verified(const Certificate& c, const PredicateRegistry& preds);

// Applies flips while recording them. Every state must satisfy the guard;
// a violation means the caller has a bug and raises InternalError.
class PathBuilder {
 public:
  PathBuilder(Triangulation start, SphereClass c, ClassPredicate guard);

  const Triangulation& current() const { return current_; }
  // Flips ab -> cd.
  void flip(Vertex a, Vertex b, Vertex c, Vertex d);
  void flip(const FlipMove& m);
  std::size_t size() const { return moves_.size(); }
  const std::vector<FlipMove>& moves() const { return moves_; }

  Certificate certificate() const;

 private:
  Triangulation start_;
  Triangulation current_;
  SphereClass class_;
  ClassPredicate guard_;
  std::vector<FlipMove> moves_;
};

// Appends the moves of b to a. Both must be on the same working labels.
Certificate concatenate(const Certificate& a, const Certificate& b);

}  // namespace pachner
