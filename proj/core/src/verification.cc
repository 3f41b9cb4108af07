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

#include "snpassoc/verification.h"

#include <algorithm>

#include "snpassoc/negation.h"
#include "snpassoc/token.h"

namespace snpassoc {

std::vector<std::pair<std::string, std::size_t>>
VerificationReport::top_connectors() const {
  std::vector<std::pair<std::string, std::size_t>> out(
      connector_histogram.begin(), connector_histogram.end());
  std::stable_sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    return a.second > b.second;
  });
  return out;
}

namespace {

bool trigger_near(const std::vector<PhraseMatch> &triggers, TokenRange snp,
                  TokenRange phen) {
  const std::size_t lo = std::min(snp.begin, phen.begin);
  const std::size_t hi = std::max(snp.end, phen.end);
  const TokenRange window{lo > kTriggerWindow ? lo - kTriggerWindow : 0,
                          hi + kTriggerWindow};
  for (const PhraseMatch &m : triggers) {
    if (window.contains(m.tokens) && !m.tokens.overlaps(snp) &&
        !m.tokens.overlaps(phen)) {
      return true;
    }
  }
  return false;
}

void tally_innate(const Sentence &sentence, const std::vector<Token> &tokens,
                  const PhraseLexicon &cues, const PhraseLexicon &triggers,
                  InnatePolarity &out) {
  if (sentence.candidates.empty()) return;
  if (!detect_cues(tokens, cues).empty()) return;
  const std::vector<PhraseMatch> found = match_phrases(tokens, triggers);
  for (const CandidatePair &c : sentence.candidates) {
    const TokenRange snp = token_range_for(tokens, sentence.snp_of(c).span);
    const TokenRange phen =
        token_range_for(tokens, sentence.phenotype_of(c).span);
    if (trigger_near(found, snp, phen)) {
      ++out.positive;
    } else {
      ++out.negative;
    }
  }
}

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

InnatePolarity estimate_innate_polarity(const Corpus &corpus,
                                        const PhraseLexicon &cues,
                                        const PhraseLexicon &triggers) {
  InnatePolarity out;
  for (const Document &doc : corpus.documents) {
    for (const Sentence &s : doc.sentences) {
      tally_innate(s, tokenize(s.text), cues, triggers, out);
    }
  }
  return out;
}

VerificationReport compute_verification_stats(const Corpus &corpus,
                                              const PhraseLexicon &connectors,
                                              const PhraseLexicon &cues,
                                              const PhraseLexicon &triggers) {
  VerificationReport r;
  std::size_t tokens_total = 0;
  std::size_t snps = 0;
  std::size_t phenotypes = 0;
  std::size_t concessive = 0;
  std::size_t with_connector = 0;
  InnatePolarity innate;
  for (const Document &doc : corpus.documents) {
    for (const Sentence &s : doc.sentences) {
      ++r.n_sentences;
      const std::vector<Token> tokens = tokenize(s.text);
      tokens_total += tokens.size();
      for (const EntityMention &m : s.mentions) {
        (m.kind == EntityKind::kSnp ? snps : phenotypes) += 1;
      }
      bool has_connector = false;
      bool has_concessive = false;
      for (const PhraseMatch &m : match_phrases(tokens, connectors)) {
        ++r.connector_histogram[m.entry->phrase];
        has_connector = true;
        if (m.entry->has_flag("concessive")) has_concessive = true;
      }
      const std::size_t n = s.candidates.size();
      r.n_candidates += n;
      if (has_connector) with_connector += n;
      if (has_concessive) concessive += n;
      tally_innate(s, tokens, cues, triggers, innate);
    }
  }
  r.avg_tokens_per_sentence = ratio(tokens_total, r.n_sentences);
  r.avg_snp_per_sentence = ratio(snps, r.n_sentences);
  r.avg_phenotype_per_sentence = ratio(phenotypes, r.n_sentences);
  r.concessive_instance_ratio = ratio(concessive, r.n_candidates);
  r.candidates_with_connector_ratio = ratio(with_connector, r.n_candidates);
  r.innate_positive = innate.positive;
  r.innate_negative = innate.negative;
  return r;
}

}  // namespace snpassoc
