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

#include <benchmark/benchmark.h>

#include "pachner/canonical.hpp"
#include "pachner/classify.hpp"
#include "pachner/flag_path.hpp"
#include "pachner/generators.hpp"
#include "pachner/level_graph.hpp"
#include "pachner/stacked_path.hpp"

using namespace pachner;

namespace {

void BM_Signature(benchmark::State& state) {
  const auto t = a_sphere(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(signature(t));
}
BENCHMARK(BM_Signature)->Arg(10)->Arg(20)->Arg(40);

void BM_IsFlag(benchmark::State& state) {
  const auto t = a_sphere(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_flag(t));
}
BENCHMARK(BM_IsFlag)->Arg(20)->Arg(40);

void BM_EnumerateAll(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_all(n));
}
BENCHMARK(BM_EnumerateAll)->Arg(8)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_StackedLevelGraph(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto nodes = enumerate_stacked(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(components(build_level_graph(n, SphereClass::Stacked, nodes)));
}
BENCHMARK(BM_StackedLevelGraph)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

// longest flag certificate at n = 10
void BM_FlagPath(benchmark::State& state) {
  Triangulation worst = a_sphere(10);
  std::size_t longest = 0;
  for (const auto& s : enumerate_class(10, SphereClass::Flag)) {
    const auto t = from_signature(s);
    if (is_gamma(t)) continue;
    const auto len = to_canonical_an(t).moves.size();
    if (len > longest) {
      longest = len;
      worst = t;
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(to_canonical_an(worst));
  state.counters["flips"] = static_cast<double>(longest);
}
BENCHMARK(BM_FlagPath)->Unit(benchmark::kMicrosecond);

void BM_StackedPath(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  // cycles through every member
  std::vector<Triangulation> members;
  for (const auto& s : enumerate_stacked(n)) {
    auto t = from_signature(s);
    if (is_stacked0(t)) members.push_back(std::move(t));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(stacked_canonical_path(members[i++ % members.size()]));
}
BENCHMARK(BM_StackedPath)->Arg(10)->Arg(12)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
