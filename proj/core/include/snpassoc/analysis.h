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

#ifndef SNPASSOC_ANALYSIS_H_
#define SNPASSOC_ANALYSIS_H_

#include <cstddef>
#include <vector>

#include "snpassoc/corpus.h"
#include "snpassoc/featurize.h"
#include "snpassoc/lexicon.h"
#include "snpassoc/markers.h"
#include "snpassoc/negation.h"
#include "snpassoc/textproc.h"
#include "snpassoc/token.h"

namespace snpassoc {

// Everything the classifiers need from one sentence, computed once.
struct SentenceAnalysis {
  std::vector<Token> tokens;
  std::vector<ClauseSpan> clauses;
  std::vector<NegationAnnotation> negations;
  std::vector<ModalMarker> markers;
  std::vector<PValueMention> pvalues;
  std::vector<TokenRange> mention_tokens;  // parallel to Sentence::mentions
};

// A mention covers every token it touches. Throws AlignmentError when a
// mention touches no token at all.
SentenceAnalysis analyze_sentence(const Sentence &sentence,
                                  const Lexicons &lexicons);

struct CandidateContext {
  const Document &document;
  const Sentence &sentence;
  const CandidatePair &pair;
  const SentenceAnalysis &analysis;

  EntityPair entities() const {
    return {analysis.mention_tokens.at(pair.snp),
            analysis.mention_tokens.at(pair.phenotype)};
  }
};

struct CandidateRef {
  std::size_t document = 0;
  std::size_t sentence = 0;
  std::size_t pair = 0;
};

// A corpus plus per-sentence analyses. Immutable once built.
class AnalyzedCorpus {
 public:
  AnalyzedCorpus(Corpus corpus, const Lexicons &lexicons);

  const Corpus &corpus() const { return corpus_; }
  const std::vector<SentenceAnalysis> &analyses(std::size_t document) const {
    return analyses_.at(document);
  }
  std::vector<CandidateRef> candidates() const;
  CandidateContext context(const CandidateRef &ref) const;

  // Documents at the given indices, in that order.
  AnalyzedCorpus select(const std::vector<std::size_t> &documents) const;
  AnalyzedCorpus subset(SplitTag tag) const;

 private:
  AnalyzedCorpus() = default;

  Corpus corpus_;
  std::vector<std::vector<SentenceAnalysis>> analyses_;
};

}  // namespace snpassoc

#endif  // SNPASSOC_ANALYSIS_H_
