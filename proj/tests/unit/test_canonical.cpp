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

#include <random>

#include "oracles.hpp"
#include "pachner/canonical.hpp"
#include "pachner/generators.hpp"
#include "pachner/level_graph.hpp"

using namespace pachner;

TEST_CASE("signature is invariant under relabelling", "[canonical]") {
  std::mt19937 rng(11);
  for (int n = 6; n <= 12; ++n)
    for (const auto& t : {gamma(n), delta_sphere(n), a_sphere(std::max(n, 8))})
      for (int r = 0; r < 10; ++r) CHECK(signature(oracle::shuffled(t, rng)) == signature(t));
}

TEST_CASE("signature equality matches brute-force isomorphism", "[canonical]") {
  for (int n = 6; n <= 8; ++n) {
    const auto all = enumerate_all(n);
    std::vector<Triangulation> ts;
    for (const auto& s : all) ts.push_back(from_signature(s));
    for (std::size_t i = 0; i < ts.size(); ++i)
      for (std::size_t j = i; j < ts.size(); ++j) {
        if (n == 8 && j > i + 3) break;
        CHECK(oracle::isomorphic(ts[i], ts[j]) == (i == j));
      }
  }
}

TEST_CASE("canonical form is a relabelling of the input", "[canonical]") {
  std::mt19937 rng(3);
  const auto t = oracle::shuffled(a_sphere(9), rng);
  const auto c = canonical_form(t);
  CHECK(c.to_text() == signature(t).text);
  CHECK(oracle::isomorphic(c, t));
  const auto lab = canonical_labeling(t);
  CHECK(relabel(t, lab) == c);
  CHECK(from_signature(signature(t)) == c);
}

TEST_CASE("isomorphic distinguishes different spheres", "[canonical]") {
  CHECK(isomorphic(gamma(8), gamma(8)));
  CHECK_FALSE(isomorphic(gamma(8), a_sphere(8)));
  CHECK_FALSE(isomorphic(gamma(8), gamma(9)));
  CHECK(isomorphic(a_sphere(7), gamma(7)));
}
