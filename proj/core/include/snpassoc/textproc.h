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

#ifndef SNPASSOC_TEXTPROC_H_
#define SNPASSOC_TEXTPROC_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "snpassoc/corpus.h"
#include "snpassoc/lexicon.h"
#include "snpassoc/token.h"
#include "snpassoc/types.h"

namespace snpassoc {

struct ClauseSpan {
  TokenRange tokens;
  // Connector that opened the clause (lowercased phrase) and its tokens.
  std::optional<std::string> opened_by;
  TokenRange opener;
  bool concessive = false;

  friend bool operator==(const ClauseSpan &, const ClauseSpan &) = default;
};

// Partitions the token sequence into clauses.
//
// A clause opens at every connector occurrence (lexicon phrases, longest
// first) and after every ";". A clause opened by a connector at the very
// start of the sentence is a fronted subordinate clause and closes at its
// first ","; the clause after that comma has no opener. Empty input gives
// no clauses; otherwise the clauses cover every token exactly once.
std::vector<ClauseSpan> segment_clauses(std::span<const Token> tokens,
                                        const PhraseLexicon &connectors);

// Index of the clause containing token `index`.
std::size_t clause_of(std::span<const ClauseSpan> clauses, std::size_t index);

// Tokens of the form rs<1-10 digits> (any case) become SNP mentions.
std::vector<EntityMention> recognize_snps(std::span<const Token> tokens,
                                          std::string_view text);

// Longest-match, non-overlapping gazetteer lookup over lowercased tokens.
std::vector<EntityMention> recognize_phenotypes(
    std::span<const Token> tokens, std::string_view text,
    const PhraseLexicon &gazetteer);

// Cross product of the sentence's SNP and phenotype mentions, ordered by
// SNP start then phenotype start. Ids are "<sentence id>.c<k>"; gold
// fields are left empty.
std::vector<CandidatePair> enumerate_candidates(const Sentence &sentence);

// Raw-text mode: tokenizes, recognizes entities, and enumerates candidates.
Sentence analyze_raw_sentence(std::string id, std::string text,
                              const PhraseLexicon &gazetteer);

}  // namespace snpassoc

#endif  // SNPASSOC_TEXTPROC_H_
