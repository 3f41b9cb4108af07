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

#ifndef SNPASSOC_FEATURIZE_H_
#define SNPASSOC_FEATURIZE_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "snpassoc/negation.h"
#include "snpassoc/sparse.h"
#include "snpassoc/token.h"
#include "snpassoc/types.h"

namespace snpassoc {

// Token ranges of a candidate's two entities within its sentence.
struct EntityPair {
  TokenRange snp;
  TokenRange phenotype;
};

enum class ScopePosition { kLeft, kInside, kRight };

// An entity touching the scope at all counts as inside.
ScopePosition position_relative_to(TokenRange entity, TokenRange scope);

// The six entity-vs-scope configurations plus the neutral-candidate flag.
struct PositionalFeatures {
  bool both_inside = false;
  bool one_left_one_inside = false;
  bool one_right_one_inside = false;
  bool both_left = false;
  bool both_right = false;
  bool one_left_one_right = false;
  bool is_neutral_cand = false;

  // Names of the features that are true, in declaration order.
  std::vector<std::string> fired() const;

  friend bool operator==(const PositionalFeatures &,
                         const PositionalFeatures &) = default;
};

inline constexpr std::string_view kFeatureNames[] = {
    "BothInsNegSc",  "OneLeftOneInsNegSc", "OneRightOneInsNegSc",
    "BothLeftNegSc", "BothRightNegSc",     "OneLeftOneRightNegSc",
    "IsNeutralCand"};

// One-hot configuration per annotation, OR-ed across annotations. All false
// when there is no annotation. is_neutral_cand is left false.
PositionalFeatures positional_features(
    EntityPair entities, std::span<const NegationAnnotation> annotations);

inline constexpr std::string_view kSnpPlaceholder = "SNP_ENT";
inline constexpr std::string_view kPhenotypePlaceholder = "PHEN_ENT";

// Global-context token patterns with each candidate entity collapsed to a
// single placeholder token.
//   fore_between:  sentence start up to the second entity
//   between:       strictly between the entities
//   between_after: after the first entity to sentence end
struct ContextPatterns {
  std::vector<std::string> fore_between;
  std::vector<std::string> between;
  std::vector<std::string> between_after;
};

ContextPatterns context_patterns(std::span<const Token> tokens,
                                 EntityPair entities);

// n-gram counts (1..n_max) per pattern, keyed "<pattern>:<gram>", e.g.
// "between:associated with". Throws std::invalid_argument if n_max < 1.
FeatureBag context_ngram_bag(std::span<const Token> tokens, EntityPair entities,
                             int n_max = 3);
SparseVector context_ngram_features(std::span<const Token> tokens,
                                    EntityPair entities,
                                    const Vocabulary &vocabulary,
                                    int n_max = 3);

// all-lower / Capitalized / ALLCAPS / mixed / digit, or "other" for tokens
// with neither letters nor digits.
std::string_view word_shape(std::string_view surface);

// Up to `window` tokens either side of each entity, keyed
// "<role>:<offset>:<kind>=<value>" with role snp|phen and offsets like -1
// or +2. Positions past the sentence edge emit "<role>:<offset>:PAD".
// Tokens of the other entity appear as its placeholder. Throws
// std::invalid_argument if window < 1.
FeatureBag local_context_bag(std::span<const Token> tokens, EntityPair entities,
                             int window = 2);
SparseVector local_context_features(std::span<const Token> tokens,
                                    EntityPair entities,
                                    const Vocabulary &vocabulary,
                                    int window = 2);

}  // namespace snpassoc

#endif  // SNPASSOC_FEATURIZE_H_
