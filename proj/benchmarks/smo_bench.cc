// Copyright 2026 The snpassoc Authors.
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


#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "fixtures.h"
#include "snpassoc/svm.h"

namespace snpassoc::bench {
namespace {

// Gaussian blobs with a linear Gram matrix.
std::pair<GramMatrix, std::vector<int>> blobs(std::size_t n) {
  std::mt19937 rng(11);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::vector<std::vector<double>> xs(n, std::vector<double>(5));
  std::vector<int> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = i % 2 ? 1 : -1;
    for (double &v : xs[i]) v = noise(rng) + 0.8 * y[i];
  }
  std::vector<double> k(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double d = 0.0;
      for (int t = 0; t < 5; ++t) d += xs[i][t] * xs[j][t];
      k[i * n + j] = d;
    }
  }
  return {GramMatrix(n, std::move(k)), std::move(y)};
}

void BM_SmoLinear(benchmark::State &state) {
  const auto [gram, y] = blobs(static_cast<std::size_t>(state.range(0)));
  SmoOptions opts;
  opts.C = 1.0;
  for (auto _ : state) benchmark::DoNotOptimize(smo_solve(gram, y, opts));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SmoLinear)->RangeMultiplier(2)->Range(64, 512)->Complexity();

void BM_SmoSubtree(benchmark::State &state) {
  const Payloads &p = synthetic_payloads();
  const std::vector<Payload> payloads(p.trees.begin(), p.trees.end());
  const GramMatrix gram =
      GramMatrix::compute({KernelKind::kSubtree, 0.4}, payloads);
  SmoOptions opts;
  for (auto _ : state) benchmark::DoNotOptimize(smo_solve(gram, p.labels, opts));
}
BENCHMARK(BM_SmoSubtree);

}  // namespace
}  // namespace snpassoc::bench
