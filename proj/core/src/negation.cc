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

#include "snpassoc/negation.h"

#include "snpassoc/error.h"

namespace snpassoc {

std::vector<CueMatch> detect_cues(std::span<const Token> tokens,
                                  const PhraseLexicon &cues) {
  std::vector<CueMatch> out;
  for (const PhraseMatch &m : match_phrases(tokens, cues)) {
    if (m.entry->has_flag("pseudo")) continue;
    CueMatch cue;
    cue.tokens = m.tokens;
    cue.chars = {tokens[m.tokens.begin].span.start,
                 tokens[m.tokens.end - 1].span.end};
    cue.phrase = m.entry->phrase;
    cue.backward = m.entry->has_flag("backward");
    out.push_back(std::move(cue));
  }
  return out;
}

NegationAnnotation resolve_scope(Span cue, std::span<const Token> tokens,
                                 std::span<const ClauseSpan> clauses,
                                 bool backward) {
  std::size_t first = tokens.size();
  std::size_t last = tokens.size();
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].span.start == cue.start) first = i;
    if (tokens[i].span.end == cue.end) last = i;
  }
  if (first == tokens.size() || last == tokens.size() || last < first) {
    throw AlignmentError("negation cue [" + std::to_string(cue.start) + "," +
                         std::to_string(cue.end) +
                         ") is not aligned to token boundaries");
  }
  const std::size_t k = clause_of(clauses, first);
  if (k == clauses.size() || !clauses[k].tokens.contains(last)) {
    throw AlignmentError("negation cue crosses a clause boundary");
  }
  const TokenRange clause = clauses[k].tokens;

  NegationAnnotation ann;
  ann.cue = {first, last + 1};
  ann.cue_chars = cue;
  for (std::size_t i = first; i <= last; ++i) {
    if (!ann.phrase.empty()) ann.phrase.push_back(' ');
    ann.phrase += tokens[i].lower;
  }
  if (backward && clause.end - ann.cue.end <= 2) {
    ann.backward = true;
    ann.scope = clause;
  } else if (ann.cue.end < clause.end) {
    ann.scope = {ann.cue.end, clause.end};
  } else if (clause.begin < ann.cue.begin) {
    ann.scope = {clause.begin, ann.cue.begin};
  } else {
    ann.scope = ann.cue;
  }
  ann.clause_bounded = ann.scope.end == clause.end && k + 1 < clauses.size() &&
                       clauses[k + 1].opened_by.has_value();
  return ann;
}

std::vector<NegationAnnotation> annotate_negation(
    std::span<const Token> tokens, std::span<const ClauseSpan> clauses,
    const PhraseLexicon &cues) {
  std::vector<NegationAnnotation> out;
  for (const CueMatch &cue : detect_cues(tokens, cues)) {
    out.push_back(resolve_scope(cue.chars, tokens, clauses, cue.backward));
  }
  return out;
}

std::vector<NegationAnnotation> annotate_negation(std::string_view text,
                                                  const PhraseLexicon &cues,
                                                  const PhraseLexicon &connectors) {
  const std::vector<Token> tokens = tokenize(text);
  const std::vector<ClauseSpan> clauses = segment_clauses(tokens, connectors);
  return annotate_negation(tokens, clauses, cues);
}

}  // namespace snpassoc
