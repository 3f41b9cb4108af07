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


#ifndef SNPASSOC_BENCHMARKS_FIXTURES_H_
#define SNPASSOC_BENCHMARKS_FIXTURES_H_

#include <string>
#include <vector>

#include "snpassoc/analysis.h"
#include "snpassoc/corpus.h"
#include "snpassoc/lexicon.h"
#include "snpassoc/sparse.h"
#include "snpassoc/tree.h"

namespace snpassoc::bench {

inline const AnalyzedCorpus &synthetic_corpus() {
  static const AnalyzedCorpus corpus(
      ingest_corpus(std::string(SNPASSOC_BENCH_DATA) + "/synthetic30.jsonl"),
      Lexicons::defaults());
  return corpus;
}

struct Payloads {
  std::vector<SparseVector> global;
  std::vector<SparseVector> local;
  std::vector<ParseTree> trees;
  std::vector<int> labels;
};

// Every candidate of the synthetic corpus in all three representations.
inline const Payloads &synthetic_payloads() {
  static const Payloads payloads = [] {
    const AnalyzedCorpus &corpus = synthetic_corpus();
    std::vector<FeatureBag> global_bags;
    std::vector<FeatureBag> local_bags;
    Payloads p;
    for (const CandidateRef &ref : corpus.candidates()) {
      const CandidateContext ctx = corpus.context(ref);
      global_bags.push_back(
          context_ngram_bag(ctx.analysis.tokens, ctx.entities()));
      local_bags.push_back(
          local_context_bag(ctx.analysis.tokens, ctx.entities()));
      p.trees.push_back(heuristic_tree(ctx.analysis.tokens,
                                       ctx.analysis.clauses, ctx.entities()));
      p.labels.push_back(ctx.pair.gold_label == GoldLabel::kPositive ? 1 : -1);
    }
    const Vocabulary gv = Vocabulary::from_bags(global_bags);
    const Vocabulary lv = Vocabulary::from_bags(local_bags);
    for (const CandidateRef &ref : corpus.candidates()) {
      const CandidateContext ctx = corpus.context(ref);
      p.global.push_back(
          context_ngram_features(ctx.analysis.tokens, ctx.entities(), gv));
      p.local.push_back(
          local_context_features(ctx.analysis.tokens, ctx.entities(), lv));
    }
    return p;
  }();
  return payloads;
}

}  // namespace snpassoc::bench

#endif  // SNPASSOC_BENCHMARKS_FIXTURES_H_
