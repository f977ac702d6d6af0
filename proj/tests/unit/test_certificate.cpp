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

#include <catch2/catch_amalgamated.hpp>

#include "pachner/certificate.hpp"
#include "pachner/classify.hpp"
#include "pachner/errors.hpp"
#include "pachner/flag_path.hpp"
#include "pachner/generators.hpp"

using namespace pachner;

namespace {
Certificate some_flag_certificate() {
  // one flip away from A_9 inside the flag class
  const auto a = a_sphere(9);
  for (const auto& m : legal_flips(a)) {
    const auto t = flip(a, m);
    if (is_flag(t) && !is_an(t) && !is_gamma(t)) return to_canonical_an(t);
  }
  throw std::runtime_error("no flag neighbour");
}
}  // namespace

TEST_CASE("JSON round trip", "[certificate]") {
  const auto c = some_flag_certificate();
  CHECK_FALSE(c.moves.empty());
  const auto d = certificate_from_json(nlohmann::json::parse(to_json(c).dump()));
  CHECK(d.moves == c.moves);
  CHECK(d.start == c.start);
  CHECK(d.end == c.end);
  CHECK(d.start_labeling == c.start_labeling);
  CHECK(d.sphere_class == c.sphere_class);
  CHECK(verify_certificate(d, default_predicates()).ok);
}

TEST_CASE("tampered certificates fail verification", "[certificate]") {
  auto c = some_flag_certificate();
  auto wrong_end = c;
  wrong_end.end = signature(gamma(9));
  CHECK_FALSE(verify_certificate(wrong_end, default_predicates()).ok);

  auto reversed = c;
  std::swap(reversed.moves.front().remove, reversed.moves.front().insert);
  const auto rep = verify_certificate(reversed, default_predicates());
  CHECK_FALSE(rep.ok);
  CHECK(rep.failed_step == std::optional<std::size_t>{1});
  CHECK_THROWS_AS(require_verified(reversed, default_predicates()), ReplayError);

  // the same flips do not stay stacked
  auto other_class = c;
  other_class.sphere_class = SphereClass::Stacked;
  CHECK_FALSE(verify_certificate(other_class, default_predicates()).ok);
}

TEST_CASE("class names", "[certificate]") {
  CHECK(parse_class("all") == SphereClass::Any);
  CHECK(parse_class("flag") == SphereClass::Flag);
  CHECK(parse_class(class_name(SphereClass::Stacked0)) == SphereClass::Stacked0);
  CHECK_THROWS_AS(parse_class("round"), ParseError);
  CHECK_THROWS_AS(certificate_from_json(nlohmann::json::parse("{\"class\":\"flag\"}")), ParseError);
}

TEST_CASE("path builder rejects guard violations", "[certificate]") {
  const auto a = a_sphere(9);
  PathBuilder pb(a, SphereClass::Flag, is_flag);
  // find a flip that breaks flagness
  for (const auto& m : legal_flips(a)) {
    if (is_flag(flip(a, m))) continue;
    CHECK_THROWS_AS(pb.flip(m), InternalError);
    break;
  }
  CHECK(pb.size() == 0);
}
