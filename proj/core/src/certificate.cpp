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

#include "pachner/certificate.hpp"

#include "pachner/errors.hpp"

namespace pachner {

std::string_view class_name(SphereClass c) {
  switch (c) {
    case SphereClass::Any: return "any";
    case SphereClass::Flag: return "flag";
    case SphereClass::Stacked: return "stacked";
    case SphereClass::Stacked0: return "stacked0";
    case SphereClass::Hamiltonian: return "hamiltonian";
  }
  return "any";
}

SphereClass parse_class(std::string_view s) {
  if (s == "any" || s == "all") return SphereClass::Any;
  if (s == "flag") return SphereClass::Flag;
  if (s == "stacked") return SphereClass::Stacked;
  if (s == "stacked0") return SphereClass::Stacked0;
  if (s == "hamiltonian") return SphereClass::Hamiltonian;
  throw ParseError("unknown class '" + std::string(s) + "'");
}

nlohmann::json to_json(const Certificate& c) {
  nlohmann::json moves = nlohmann::json::array();
  for (const auto& m : c.moves)
    moves.push_back({{"remove", {m.remove.lo, m.remove.hi}},
                     {"insert", {m.insert.lo, m.insert.hi}}});
  nlohmann::json j;
  j["class"] = std::string(class_name(c.sphere_class));
  j["start"] = c.start.text;
  j["start_labeling"] = c.start_labeling;
  j["moves"] = std::move(moves);
  j["end"] = c.end.text;
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
  try {
    Certificate c;
    c.sphere_class = parse_class(j.at("class").get<std::string>());
    c.start.text = j.at("start").get<std::string>();
    c.start_labeling = j.at("start_labeling").get<std::string>();
    c.end.text = j.at("end").get<std::string>();
    for (const auto& m : j.at("moves")) {
      auto r = m.at("remove").get<std::vector<int>>();
      auto i = m.at("insert").get<std::vector<int>>();
      if (r.size() != 2 || i.size() != 2) throw ParseError("move edges need two vertices");
      c.moves.push_back({Edge::of(r[0], r[1]), Edge::of(i[0], i[1])});
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

VerifyReport verify_certificate(const Certificate& c, const PredicateRegistry& preds) {
  auto fail = [](std::size_t step, std::string why) {
    return VerifyReport{false, step, std::move(why)};
  };
  const ClassPredicate* pred = preds.find(c.sphere_class);
  if (pred == nullptr)
    return fail(0, "no predicate registered for class " +
                       std::string(class_name(c.sphere_class)));
  std::optional<Triangulation> cur;
  try {
    cur.emplace(Triangulation::parse(c.start_labeling));
  } catch (const Error& e) {
    return fail(0, std::string("start labelling invalid: ") + e.what());
  }
  if (signature(*cur) != c.start) return fail(0, "start signature mismatch");
  if (!(*pred)(*cur)) return fail(0, "start violates class predicate");
  for (std::size_t i = 0; i < c.moves.size(); ++i) {
    try {
      cur.emplace(flip(*cur, c.moves[i]));
    } catch (const Error& e) {
      return fail(i + 1, e.what());
    }
    if (!(*pred)(*cur))
      return fail(i + 1, "state violates " + std::string(class_name(c.sphere_class)) +
                             " predicate");
  }
  if (signature(*cur) != c.end) return fail(c.moves.size(), "end signature mismatch");
  return {};
}

void require_verified(const Certificate& c, const PredicateRegistry& preds) {
  auto r = verify_certificate(c, preds);
  if (!r.ok) throw ReplayError(*r.failed_step, r.reason);
}

PathBuilder::PathBuilder(Triangulation start, SphereClass c, ClassPredicate guard)
    : start_(start), current_(std::move(start)), class_(c), guard_(std::move(guard)) {}

void PathBuilder::flip(Vertex a, Vertex b, Vertex c, Vertex d) {
  flip(FlipMove{Edge::of(a, b), Edge::of(c, d)});
}

void PathBuilder::flip(const FlipMove& m) {
  Triangulation next = [&] {
    try {
      return pachner::flip(current_, m);
    } catch (const IllegalFlip& e) {
      throw InternalError(std::string("path step ") + std::to_string(moves_.size() + 1) +
                          ": " + e.what());
    }
  }();
  if (guard_ && !guard_(next))
    throw InternalError("path step " + std::to_string(moves_.size() + 1) + " left class " +
                        std::string(class_name(class_)) + " at flip " +
                        to_string(m.remove) + " -> " + to_string(m.insert));
  current_ = std::move(next);
  moves_.push_back(m);
}

Certificate PathBuilder::certificate() const {
  return Certificate{class_, signature(start_), start_.to_text(), moves_,
                     signature(current_)};
}

Certificate concatenate(const Certificate& a, const Certificate& b) {
  Certificate out = a;
  out.moves.insert(out.moves.end(), b.moves.begin(), b.moves.end());
  out.end = b.end;
  return out;
}

}  // namespace pachner
