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

#ifndef SNPASSOC_NEGATION_H_
#define SNPASSOC_NEGATION_H_

#include <span>
#include <string>
#include <vector>

#include "snpassoc/lexicon.h"
#include "snpassoc/textproc.h"
#include "snpassoc/token.h"
#include "snpassoc/types.h"

namespace snpassoc {

struct CueMatch {
  TokenRange tokens;
  Span chars;
  std::string phrase;
  bool backward = false;
};

// A negation cue and the token range it negates.
//
// Forward cues scope from the token after the cue to the end of the cue's
// clause. Backward cues ("was not") scope over their whole clause when the
// clause ends within two tokens after the cue, and behave like forward cues
// otherwise. A forward cue with nothing after it in its clause scopes back
// to the clause start instead; scopes are never empty.
struct NegationAnnotation {
  TokenRange cue;
  Span cue_chars;
  TokenRange scope;
  // The scope stopped at a clause opened by a connector, not at the end of
  // the sentence.
  bool clause_bounded = false;
  bool backward = false;
  std::string phrase;

  friend bool operator==(const NegationAnnotation &,
                         const NegationAnnotation &) = default;
};

// Non-overlapping cue matches in token order (longest first, then
// leftmost). Entries flagged "pseudo" take part in overlap resolution but
// are not returned.
std::vector<CueMatch> detect_cues(std::span<const Token> tokens,
                                  const PhraseLexicon &cues);

// Throws AlignmentError when `cue` does not start and end on token
// boundaries or straddles two clauses.
NegationAnnotation resolve_scope(Span cue, std::span<const Token> tokens,
                                 std::span<const ClauseSpan> clauses,
                                 bool backward = false);

std::vector<NegationAnnotation> annotate_negation(
    std::span<const Token> tokens, std::span<const ClauseSpan> clauses,
    const PhraseLexicon &cues);

// Convenience overload that tokenizes and segments `text` itself.
std::vector<NegationAnnotation> annotate_negation(std::string_view text,
                                                  const PhraseLexicon &cues,
                                                  const PhraseLexicon &connectors);

}  // namespace snpassoc

#endif  // SNPASSOC_NEGATION_H_
