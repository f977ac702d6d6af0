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
#include "pachner/classify.hpp"
#include "pachner/errors.hpp"
#include "pachner/generators.hpp"
#include "pachner/level_graph.hpp"
#include "pachner/stacked_flip.hpp"
#include "pachner/stacked_path.hpp"
#include "pachner/tree_shape.hpp"

using namespace pachner;

TEST_CASE("stacked-flip predicate matches the brute-force oracle", "[stacked]") {
  for (int n = 5; n <= 9; ++n)
    for (const auto& s : enumerate_stacked(n)) {
      const auto t = from_signature(s);
      for (const auto& m : legal_flips(t)) {
        const bool keeps = oracle::stacked(flip(t, m));
        CHECK(flip_preserves_stacked(t, m) == keeps);
        CHECK(stacked_flip_fast(t, m.remove) == keeps);
        const auto c = stacked_flip_conditions(t, m);
        CHECK(c.link_path_length_two == keeps);
        CHECK(c.two_tetrahedra == keeps);
        CHECK(c.three_common_neighbors == keeps);
        CHECK(c.unique_extra_neighbor == keeps);
      }
    }
}

TEST_CASE("stacked-flip predicate errors", "[stacked]") {
  CHECK_THROWS_AS(flip_preserves_stacked(gamma(8), legal_flips(gamma(8)).front()), NotStacked);
  const auto d = delta_sphere(6);
  CHECK_THROWS_AS(flip_preserves_stacked(d, {Edge::of(1, 2), Edge::of(5, 6)}), IllegalFlip);
}

TEST_CASE("local dual tree rewrite equals recomputation", "[stacked]") {
  for (int n = 6; n <= 10; ++n)
    for (const auto& s : enumerate_stacked(n)) {
      const auto t = from_signature(s);
      const auto before = dual_tree(clique_ball(t));
      for (const auto& m : legal_flips(t)) {
        if (!stacked_flip_fast(t, m.remove)) {
          CHECK_THROWS_AS(rewrite_dual_tree(t, m), PredicateFailed);
          continue;
        }
        const auto after = dual_tree(clique_ball(flip(t, m)));
        CHECK(rewrite_dual_tree(t, m) == after);
        CHECK(forests_isomorphic(degree4_core(before), degree4_core(after)));
      }
    }
}

TEST_CASE("degree-4 trees", "[trees]") {
  // unlabelled trees with maximum degree at most four
  const std::vector<std::size_t> known{1, 1, 1, 2, 3, 5, 9, 18, 35, 75};
  for (int m = 1; m <= 10; ++m) {
    const auto ts = enumerate_deg4_trees(m);
    CHECK(ts.size() == known[m - 1]);
    for (const auto& t : ts) {
      CHECK(t.size() == m);
      CHECK(t.max_degree() <= 4);
      CHECK(TreeShape::from_code(t.canonical()).canonical() == t.canonical());
    }
  }
  CHECK_THROWS_AS(enumerate_deg4_trees(0), BadSize);
  CHECK_THROWS_AS(enumerate_deg4_trees(19), SizeLimit);
  CHECK_THROWS_AS(TreeShape::from_code("(()"), ParseError);
}

TEST_CASE("tree codes ignore labels", "[trees]") {
  CHECK(tree_code(4, {{0, 1}, {1, 2}, {2, 3}}) == tree_code(4, {{2, 0}, {0, 3}, {3, 1}}));
  CHECK(tree_code(4, {{0, 1}, {0, 2}, {0, 3}}) != tree_code(4, {{0, 1}, {1, 2}, {2, 3}}));
  CHECK(forest_code(4, {{0, 1}, {2, 3}}) == forest_code(4, {{0, 2}, {1, 3}}));
}

TEST_CASE("every degree-4-free stacked sphere reaches the common-edge sphere", "[stacked]") {
  std::mt19937 rng(5);
  for (int n = 4; n <= 11; ++n) {
    const auto target = signature(delta_sphere(n));
    for (const auto& s : enumerate_stacked(n)) {
      const auto t = oracle::shuffled(from_signature(s), rng);
      if (!is_stacked0(t)) {
        CHECK_THROWS_AS(stacked_canonical_path(t), NotStacked0);
        continue;
      }
      const auto c = stacked_canonical_path(t);
      CHECK(c.sphere_class == SphereClass::Stacked0);
      CHECK(c.end == target);
      CHECK(verify_certificate(c, default_predicates()).ok);
    }
  }
}

TEST_CASE("one reduction step lowers the measure", "[stacked]") {
  for (const auto& s : enumerate_stacked(11)) {
    const auto t = from_signature(s);
    if (!is_stacked0(t)) continue;
    const auto st = reduction_state(t);
    const auto f = reduction_frame(t);
    CHECK(f.has_value() == (st.degree3_count > 0));
    if (!f) {
      CHECK(st.tree.is_path());
      continue;
    }
    auto u = t;
    for (const auto& m : reduction_moves(*f)) {
      u = flip(u, m);
      CHECK(is_stacked0(u));
    }
    const auto next = reduction_state(u);
    CHECK(std::pair(next.degree3_count, next.ell) < std::pair(st.degree3_count, st.ell));
  }
}

TEST_CASE("isolated spheres have no stacked-preserving flip", "[stacked]") {
  for (int m = 1; m <= 4; ++m)
    for (const auto& h : enumerate_deg4_trees(m)) {
      const auto s = build_isolated_sphere(h);
      CHECK(s.vertex_count() == 3 * m + 5);
      CHECK(is_stacked(s));
      for (const auto& f : legal_flips(s)) CHECK_FALSE(oracle::stacked(flip(s, f)));
      DualTree core_expect;
      core_expect.nodes.resize(h.size());
      core_expect.arcs = h.edges();
      CHECK(forests_isomorphic(degree4_core(dual_tree(clique_ball(s))), core_expect));
    }
}

TEST_CASE("padded witnesses", "[stacked]") {
  CHECK_THROWS_AS(lower_bound_components(7), BadSize);
  CHECK(lower_bound_components(8) == 1);
  CHECK(lower_bound_components(14) == 1);
  CHECK(lower_bound_components(20) == 3);
  for (int n = 8; n <= 13; ++n) {
    const auto w = isolated_witnesses(n);
    CHECK(static_cast<long long>(w.size()) == lower_bound_components(n));
    for (const auto& s : w) {
      CHECK(s.vertex_count() == n);
      CHECK(is_stacked(s));
    }
  }
}
