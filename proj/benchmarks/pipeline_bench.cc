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


#include <string>

#include <benchmark/benchmark.h>

#include "fixtures.h"
#include "snpassoc/evaluation.h"
#include "snpassoc/negation.h"
#include "snpassoc/nnb.h"
#include "snpassoc/token.h"

namespace snpassoc::bench {
namespace {

constexpr const char *kSentence =
    "Although rs1051730 was associated with nicotine dependence (p = 0.003), "
    "it was not associated with lung cancer after adjustment for smoking.";

void BM_Tokenize(benchmark::State &state) {
  const std::string text(kSentence);
  for (auto _ : state) benchmark::DoNotOptimize(tokenize(text));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_Tokenize);

void BM_AnalyzeCorpus(benchmark::State &state) {
  const Corpus corpus = synthetic_corpus().corpus();
  const Lexicons lex = Lexicons::defaults();
  for (auto _ : state) benchmark::DoNotOptimize(AnalyzedCorpus(corpus, lex));
}
BENCHMARK(BM_AnalyzeCorpus)->Unit(benchmark::kMillisecond);

void BM_ExtractAssociations(benchmark::State &state) {
  const AnalyzedCorpus &corpus = synthetic_corpus();
  for (auto _ : state) {
    for (std::size_t d = 0; d < corpus.corpus().documents.size(); ++d) {
      benchmark::DoNotOptimize(extract_associations(
          corpus.corpus().documents[d], corpus.analyses(d), nullptr));
    }
  }
}
BENCHMARK(BM_ExtractAssociations);

void BM_CrossValidation(benchmark::State &state) {
  const AnalyzedCorpus &corpus = synthetic_corpus();
  ExperimentConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_table2(corpus, 3, config));
  }
}
BENCHMARK(BM_CrossValidation)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
}  // namespace snpassoc::bench
