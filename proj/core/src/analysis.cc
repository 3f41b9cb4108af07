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

#include "snpassoc/analysis.h"

#include <string>

#include "snpassoc/error.h"

namespace snpassoc {

SentenceAnalysis analyze_sentence(const Sentence &sentence,
                                  const Lexicons &lexicons) {
  SentenceAnalysis a;
  a.tokens = tokenize(sentence.text);
  a.clauses = segment_clauses(a.tokens, lexicons.connectors);
  a.negations = annotate_negation(a.tokens, a.clauses, lexicons.cues);
  a.markers = detect_modal_markers(a.tokens, lexicons.modality);
  a.pvalues = extract_pvalues(sentence.text);
  for (const EntityMention &m : sentence.mentions) {
    const TokenRange r = token_range_for(a.tokens, m.span);
    if (r.empty()) {
      throw AlignmentError("mention '" + m.surface + "' in sentence " +
                           sentence.id + " covers no token");
    }
    a.mention_tokens.push_back(r);
  }
  return a;
}

AnalyzedCorpus::AnalyzedCorpus(Corpus corpus, const Lexicons &lexicons)
    : corpus_(std::move(corpus)) {
  analyses_.reserve(corpus_.documents.size());
  for (const Document &doc : corpus_.documents) {
    std::vector<SentenceAnalysis> per_doc;
    per_doc.reserve(doc.sentences.size());
    for (const Sentence &s : doc.sentences) {
      per_doc.push_back(analyze_sentence(s, lexicons));
    }
    analyses_.push_back(std::move(per_doc));
  }
}

std::vector<CandidateRef> AnalyzedCorpus::candidates() const {
  std::vector<CandidateRef> out;
  for (std::size_t d = 0; d < corpus_.documents.size(); ++d) {
    const Document &doc = corpus_.documents[d];
    for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
      for (std::size_t p = 0; p < doc.sentences[s].candidates.size(); ++p) {
        out.push_back({d, s, p});
      }
    }
  }
  return out;
}

CandidateContext AnalyzedCorpus::context(const CandidateRef &ref) const {
  const Document &doc = corpus_.documents.at(ref.document);
  const Sentence &sentence = doc.sentences.at(ref.sentence);
  return {doc, sentence, sentence.candidates.at(ref.pair),
          analyses_.at(ref.document).at(ref.sentence)};
}

AnalyzedCorpus AnalyzedCorpus::select(
    const std::vector<std::size_t> &documents) const {
  AnalyzedCorpus out;
  for (std::size_t d : documents) {
    out.corpus_.documents.push_back(corpus_.documents.at(d));
    out.analyses_.push_back(analyses_.at(d));
  }
  return out;
}

AnalyzedCorpus AnalyzedCorpus::subset(SplitTag tag) const {
  std::vector<std::size_t> picked;
  for (std::size_t d = 0; d < corpus_.documents.size(); ++d) {
    if (corpus_.documents[d].split == tag) picked.push_back(d);
  }
  return select(picked);
}

}  // namespace snpassoc
