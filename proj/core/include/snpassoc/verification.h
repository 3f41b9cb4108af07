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

#ifndef SNPASSOC_VERIFICATION_H_
#define SNPASSOC_VERIFICATION_H_

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "snpassoc/corpus.h"
#include "snpassoc/lexicon.h"

namespace snpassoc {

struct VerificationReport {
  std::size_t n_candidates = 0;
  std::size_t n_sentences = 0;
  double avg_tokens_per_sentence = 0.0;
  std::map<std::string, std::size_t> connector_histogram;
  // Candidates whose sentence holds a connector flagged "concessive".
  double concessive_instance_ratio = 0.0;
  double candidates_with_connector_ratio = 0.0;
  double avg_snp_per_sentence = 0.0;
  double avg_phenotype_per_sentence = 0.0;
  std::size_t innate_positive = 0;
  std::size_t innate_negative = 0;

  // Connectors by descending count, ties alphabetical.
  std::vector<std::pair<std::string, std::size_t>> top_connectors() const;
};

struct InnatePolarity {
  std::size_t positive = 0;
  std::size_t negative = 0;
};

// Tokens either side of the entity pair that still count as "adjacent" for
// a trigger phrase.
inline constexpr std::size_t kTriggerWindow = 3;

// Only candidates in sentences without a negation cue are tallied. A
// candidate is positive when a trigger phrase lies between its entities or
// within kTriggerWindow tokens of them.
InnatePolarity estimate_innate_polarity(const Corpus &corpus,
                                        const PhraseLexicon &cues,
                                        const PhraseLexicon &triggers);

VerificationReport compute_verification_stats(const Corpus &corpus,
                                              const PhraseLexicon &connectors,
                                              const PhraseLexicon &cues,
                                              const PhraseLexicon &triggers);

}  // namespace snpassoc

#endif  // SNPASSOC_VERIFICATION_H_
