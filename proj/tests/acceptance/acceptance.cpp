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

// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any
// fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pachner/canonical.hpp"
#include "pachner/classify.hpp"
#include "pachner/flag_path.hpp"
#include "pachner/generators.hpp"
#include "pachner/level_graph.hpp"
#include "pachner/stacked_flip.hpp"
#include "pachner/stacked_path.hpp"
#include "pachner/tree_shape.hpp"

using namespace pachner;

namespace {

struct Row {
  std::size_t count;
  std::vector<std::size_t> sizes;
};

const std::map<int, Row> kTable{
    {4, {1, {1}}},
    {5, {1, {1}}},
    {6, {1, {1}}},
    {7, {3, {3}}},
    {8, {7, {1, 6}}},
    {9, {24, {1, 23}}},
    {10, {93, {3, 4, 86}}},
    {11, {434, {1, 7, 10, 19, 397}}},
    {12, {2110, {1, 2, 6, 43, 46, 57, 82, 1873}}},
    {13, {11002, {1, 2, 2, 3, 4, 6, 6, 7, 57, 222, 223, 246, 326, 394, 9503}}},
    {14, {58713, {1,  1,  3,  4,  4,  4,  5,   6,   6,   6,   6,    7,    7,    9,    9,    9,    12,
                  15, 19, 27, 28, 36, 36, 246, 304, 339, 757, 1165, 1182, 1571, 1944, 1987, 48958}}},
};

struct Level {
  std::vector<Signature> nodes;
  LevelGraph graph;
  ComponentReport report;
};

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail, double secs) {
  std::printf("criterion %d %-34s %s  %s (%.1fs)\n", id, name, ok ? "PASS" : "FAIL", detail.c_str(), secs);
  std::fflush(stdout);
  if (!ok) ++failures;
}

template <class F>
void run(int id, const char* name, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  report(id, name, ok, detail,
         std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

}  // namespace

int main() {
  std::map<int, Level> stacked;

  run(1, "stacked component table n<=14", [&](std::string& d) {
    const auto levels = enumerate_stacked_levels(14);
    bool ok = true;
    for (int n = 4; n <= 14; ++n) {
      Level lv{levels[n], {}, {}};
      lv.graph = build_level_graph(n, SphereClass::Stacked, lv.nodes);
      lv.report = components(lv.graph);
      const auto& want = kTable.at(n);
      if (lv.nodes.size() != want.count || lv.report.component_sizes != want.sizes) {
        ok = false;
        d += "n=" + std::to_string(n) + " got " + std::to_string(lv.nodes.size()) + " [" +
             join(lv.report.component_sizes) + "]; ";
      }
      stacked[n] = std::move(lv);
    }
    if (ok) d = "11 rows exact";
    return ok;
  });

  run(2, "stacked-flip predicate n<=10", [&](std::string& d) {
    long flips = 0, bad = 0;
    for (int n = 4; n <= 10; ++n)
      for (const auto& s : enumerate_stacked(n)) {
        const auto t = from_signature(s);
        for (const auto& m : legal_flips(t)) {
          ++flips;
          if (flip_preserves_stacked(t, m) != is_stacked(flip(t, m))) ++bad;
        }
      }
    d = std::to_string(flips) + " flips, " + std::to_string(bad) + " mismatches";
    return bad == 0 && flips > 0;
  });

  run(3, "flag connectivity 8<=n<=11", [&](std::string& d) {
    bool ok = true;
    for (int n = 8; n <= 11; ++n) {
      const auto g = build_level_graph(n, SphereClass::Flag);
      const auto r = components(g);
      const int g_at = g.index_of(signature(gamma(n)));
      const bool shape = r.component_sizes.size() == 2 && g_at >= 0 &&
                         r.component_sizes[r.component_of[g_at]] == 1;
      if (!shape) {
        ok = false;
        d += "F" + std::to_string(n) + " [" + join(r.component_sizes) + "]; ";
      }
    }
    long paths = 0, bad = 0;
    for (int n = 8; n <= 10; ++n) {
      const auto target = signature(a_sphere(n));
      for (const auto& s : enumerate_class(n, SphereClass::Flag)) {
        const auto t = from_signature(s);
        if (is_gamma(t)) continue;
        ++paths;
        const auto c = to_canonical_an(t);
        if (c.sphere_class != SphereClass::Flag || c.end != target ||
            !verify_certificate(c, default_predicates()).ok)
          ++bad;
      }
    }
    d += std::to_string(paths) + " certificates to A_n, " + std::to_string(bad) + " failed";
    return ok && bad == 0;
  });

  run(4, "stacked0 connectivity n<=12", [&](std::string& d) {
    long paths = 0, bad = 0;
    bool one = true;
    for (int n = 4; n <= 12; ++n) {
      const auto target = signature(delta_sphere(n));
      const Level& lv = stacked.at(n);
      std::set<int> comps;
      std::vector<char> member(lv.nodes.size(), 0);
      for (std::size_t i = 0; i < lv.nodes.size(); ++i) {
        const auto t = from_signature(lv.nodes[i]);
        if (!is_stacked0(t)) continue;
        member[i] = 1;
        comps.insert(lv.report.component_of[i]);
        ++paths;
        const auto c = stacked_canonical_path(t);
        if (c.sphere_class != SphereClass::Stacked0 || c.end != target ||
            !verify_certificate(c, default_predicates()).ok)
          ++bad;
      }
      // the members fill exactly one component
      bool exact = comps.size() == 1;
      for (std::size_t i = 0; exact && i < lv.nodes.size(); ++i)
        if ((lv.report.component_of[i] == *comps.begin()) != (member[i] == 1)) exact = false;
      if (!exact) {
        one = false;
        d += "n=" + std::to_string(n) + " spans " + std::to_string(comps.size()) + " components; ";
      }
    }
    d += std::to_string(paths) + " certificates, " + std::to_string(bad) + " failed";
    return one && bad == 0;
  });

  run(5, "isolated stacked spheres", [&](std::string& d) {
    bool ok = true;
    int built = 0;
    for (int m = 1; m <= 3; ++m) {
      const Level& lv = stacked.at(3 * m + 5);
      for (const auto& h : enumerate_deg4_trees(m)) {
        ++built;
        const int i = lv.graph.index_of(signature(build_isolated_sphere(h)));
        if (i < 0 || lv.report.component_sizes[lv.report.component_of[i]] != 1) ok = false;
      }
    }
    d = std::to_string(built) + " constructions singleton";
    for (int n : {8, 11, 14}) {
      const auto& sz = stacked.at(n).report.component_sizes;
      const long singles = std::count(sz.begin(), sz.end(), std::size_t{1});
      const long bound = lower_bound_components(n);
      d += "; n=" + std::to_string(n) + " singletons " + std::to_string(singles) + ">=" + std::to_string(bound);
      if (singles < bound) ok = false;
    }
    return ok;
  });

  run(6, "degree-4 core invariance", [&](std::string& d) {
    std::mt19937 rng(20260);
    long done = 0, bad = 0;
    const int kFlips = 10000;
    while (done < kFlips) {
      const int n = 8 + static_cast<int>(rng() % 7);  // 8..14
      const auto& nodes = stacked.at(n).nodes;
      auto t = from_signature(nodes[rng() % nodes.size()]);
      for (int step = 0; step < 200 && done < kFlips; ++step) {
        std::vector<FlipMove> ok_moves;
        for (const auto& m : legal_flips(t))
          if (stacked_flip_fast(t, m.remove)) ok_moves.push_back(m);
        if (ok_moves.empty()) break;
        const auto m = ok_moves[rng() % ok_moves.size()];
        const auto before = dual_tree(clique_ball(t));
        const auto next = flip(t, m);
        const auto after = dual_tree(clique_ball(next));
        if (!forests_isomorphic(degree4_core(before), degree4_core(after))) ++bad;
        if (!(rewrite_dual_tree(t, m) == after)) ++bad;
        t = next;
        ++done;
      }
    }
    d = std::to_string(done) + " flips, " + std::to_string(bad) + " mismatches";
    return bad == 0;
  });

  run(7, "enumeration cross-check 4<=n<=10", [&](std::string& d) {
    bool ok = true;
    for (int n = 4; n <= 10; ++n) {
      const auto a = enumerate_all(n), b = enumerate_oracle(n);
      d += std::to_string(a.size()) + (n < 10 ? "," : "");
      if (a != b) ok = false;
    }
    d = "counts " + d;
    return ok;
  });

  run(8, "hamiltonian level", [&](std::string& d) {
    bool ok = true;
    for (int n = 8; n <= 10; ++n) {
      const auto g = build_level_graph(n, SphereClass::Hamiltonian);
      const auto dia = diameter(g);
      d += "diam H" + std::to_string(n) + "=" + (dia ? std::to_string(*dia) : "inf") + "<=" +
           std::to_string(4 * n - 20) + "; ";
      if (!dia || *dia > 4 * n - 20) ok = false;
    }
    long checked = 0;
    for (int n = 4; n <= 11; ++n) {
      for (const auto& s : enumerate_all(n)) {
        const auto t = from_signature(s);
        if (!is_flag(t) && !is_stacked0(t)) continue;
        ++checked;
        if (!is_hamiltonian(t)) ok = false;
      }
    }
    d += std::to_string(checked) + " flag/stacked0 spheres hamiltonian";
    return ok;
  });

  std::printf("%s: %d of 8 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
