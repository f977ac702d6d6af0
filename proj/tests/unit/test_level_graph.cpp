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

#include <set>

#include "pachner/canonical.hpp"
#include "pachner/classify.hpp"
#include "pachner/errors.hpp"
#include "pachner/generators.hpp"
#include "pachner/level_graph.hpp"
#include "pachner/moves.hpp"

using namespace pachner;

TEST_CASE("sphere counts match the known sequence", "[graph]") {
  // triangulations of the 2-sphere on n unlabelled vertices
  const std::vector<std::size_t> known{1, 1, 2, 5, 14, 50, 233};
  for (int n = 4; n <= 10; ++n) CHECK(enumerate_all(n).size() == known[n - 4]);
}

TEST_CASE("flip closure and vertex splitting agree", "[graph]") {
  for (int n = 4; n <= 9; ++n) CHECK(enumerate_all(n) == enumerate_oracle(n));
}

TEST_CASE("stacked enumeration equals the filtered full list", "[graph]") {
  for (int n = 4; n <= 10; ++n) {
    std::vector<Signature> filtered;
    for (const auto& s : enumerate_all(n))
      if (is_stacked(from_signature(s))) filtered.push_back(s);
    CHECK(enumerate_stacked(n) == filtered);
  }
  CHECK(enumerate_stacked(7).size() == 3);
  CHECK(enumerate_stacked(12).size() == 2110);
}

TEST_CASE("size cap", "[graph]") {
  ExploreOptions opt;
  opt.max_n = 9;
  CHECK_THROWS_AS(enumerate_all(10, opt), SizeLimit);
  CHECK_THROWS_AS(enumerate_all(3), BadSize);
}

TEST_CASE("level graph arcs are exactly the class-preserving flips", "[graph]") {
  for (auto c : {SphereClass::Any, SphereClass::Stacked, SphereClass::Flag}) {
    const auto g = build_level_graph(9, c);
    std::set<std::pair<int, int>> expect;
    const auto pred = predicate_for(c);
    for (int i = 0; i < static_cast<int>(g.nodes.size()); ++i) {
      const auto t = from_signature(g.nodes[i]);
      CHECK(pred(t));
      for (const auto& m : legal_flips(t)) {
        const auto u = flip(t, m);
        if (!pred(u)) continue;
        const int j = g.index_of(signature(u));
        REQUIRE(j >= 0);
        if (j != i) expect.insert({std::min(i, j), std::max(i, j)});
      }
    }
    CHECK(std::vector<std::pair<int, int>>(expect.begin(), expect.end()) == g.arcs);
  }
}

TEST_CASE("component sizes for small stacked levels", "[graph]") {
  auto sizes = [](int n) { return components(build_level_graph(n, SphereClass::Stacked)).component_sizes; };
  CHECK(sizes(7) == std::vector<std::size_t>{3});
  CHECK(sizes(8) == std::vector<std::size_t>{1, 6});
  CHECK(sizes(10) == std::vector<std::size_t>{3, 4, 86});
}

TEST_CASE("diameter", "[graph]") {
  const auto one = build_level_graph(5, SphereClass::Any);
  CHECK(diameter(one) == 0);
  CHECK_FALSE(diameter(build_level_graph(8, SphereClass::Stacked)).has_value());
  const auto p7 = build_level_graph(7, SphereClass::Any);
  const auto d = diameter(p7);
  REQUIRE(d.has_value());
  int worst = 0;
  for (int i = 0; i < static_cast<int>(p7.nodes.size()); ++i)
    for (int x : distances_from(p7, i)) worst = std::max(worst, x);
  CHECK(*d == worst);
}

TEST_CASE("exports are deterministic", "[graph]") {
  const auto g = build_level_graph(8, SphereClass::Flag);
  CHECK(to_dot(g) == to_dot(build_level_graph(8, SphereClass::Flag)));
  CHECK(to_dot(g).rfind("graph", 0) == 0);
  const auto j = to_json(components(g));
  CHECK(nlohmann::json::parse(j.dump()) == j);
  CHECK(j.at("total_count") == g.nodes.size());
  const auto text = enumeration_text(8, SphereClass::Flag, g.nodes);
  CHECK(text.rfind("# pachner-level n=8 class=flag count=", 0) == 0);
}
