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

#include "snpassoc/featurize.h"

#include <stdexcept>

namespace snpassoc {
namespace {

enum Configuration {
  kBothInside,
  kOneLeftOneInside,
  kOneRightOneInside,
  kBothLeft,
  kBothRight,
  kOneLeftOneRight,
};

Configuration configuration(ScopePosition a, ScopePosition b) {
  using P = ScopePosition;
  if (a == P::kInside && b == P::kInside) return kBothInside;
  if (a == P::kInside || b == P::kInside) {
    const P other = a == P::kInside ? b : a;
    return other == P::kLeft ? kOneLeftOneInside : kOneRightOneInside;
  }
  if (a == P::kLeft && b == P::kLeft) return kBothLeft;
  if (a == P::kRight && b == P::kRight) return kBothRight;
  return kOneLeftOneRight;
}

// Token stream with the candidate entities collapsed to placeholders.
// `first_slot` / `second_slot` receive the placeholder positions.
std::vector<std::string> placeholder_stream(std::span<const Token> tokens,
                                            EntityPair entities,
                                            std::size_t &first_slot,
                                            std::size_t &second_slot) {
  const bool snp_first = entities.snp.begin <= entities.phenotype.begin;
  const TokenRange first = snp_first ? entities.snp : entities.phenotype;
  const TokenRange second = snp_first ? entities.phenotype : entities.snp;
  const std::string_view first_name =
      snp_first ? kSnpPlaceholder : kPhenotypePlaceholder;
  const std::string_view second_name =
      snp_first ? kPhenotypePlaceholder : kSnpPlaceholder;

  std::vector<std::string> stream;
  first_slot = second_slot = SIZE_MAX;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (first.contains(i)) {
      if (i == first.begin) {
        first_slot = stream.size();
        stream.emplace_back(first_name);
      }
      continue;
    }
    if (second.contains(i)) {
      if (i == second.begin) {
        second_slot = stream.size();
        stream.emplace_back(second_name);
      }
      continue;
    }
    stream.push_back(tokens[i].lower);
  }
  // Overlapping entities: the second collapses into the first.
  if (second_slot == SIZE_MAX) second_slot = first_slot;
  return stream;
}

void add_ngrams(FeatureBag &bag, std::string_view pattern,
                const std::vector<std::string> &seq, int n_max) {
  for (int n = 1; n <= n_max; ++n) {
    const auto len = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i + len <= seq.size(); ++i) {
      std::string key(pattern);
      key.push_back(':');
      for (std::size_t k = 0; k < len; ++k) {
        if (k > 0) key.push_back(' ');
        key += seq[i + k];
      }
      bag[key] += 1.0;
    }
  }
}

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

ScopePosition position_relative_to(TokenRange entity, TokenRange scope) {
  if (entity.end <= scope.begin) return ScopePosition::kLeft;
  if (entity.begin >= scope.end) return ScopePosition::kRight;
  return ScopePosition::kInside;
}

std::vector<std::string> PositionalFeatures::fired() const {
  const bool values[] = {both_inside,   one_left_one_inside, one_right_one_inside,
                         both_left,     both_right,          one_left_one_right,
                         is_neutral_cand};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < std::size(values); ++i) {
    if (values[i]) out.emplace_back(kFeatureNames[i]);
  }
  return out;
}

PositionalFeatures positional_features(
    EntityPair entities, std::span<const NegationAnnotation> annotations) {
  PositionalFeatures f;
  for (const NegationAnnotation &ann : annotations) {
    switch (configuration(position_relative_to(entities.snp, ann.scope),
                          position_relative_to(entities.phenotype, ann.scope))) {
      case kBothInside: f.both_inside = true; break;
      case kOneLeftOneInside: f.one_left_one_inside = true; break;
      case kOneRightOneInside: f.one_right_one_inside = true; break;
      case kBothLeft: f.both_left = true; break;
      case kBothRight: f.both_right = true; break;
      case kOneLeftOneRight: f.one_left_one_right = true; break;
    }
  }
  return f;
}

ContextPatterns context_patterns(std::span<const Token> tokens,
                                 EntityPair entities) {
  std::size_t first = 0;
  std::size_t second = 0;
  const std::vector<std::string> stream =
      placeholder_stream(tokens, entities, first, second);
  ContextPatterns p;
  p.fore_between.assign(stream.begin(),
                        stream.begin() + static_cast<std::ptrdiff_t>(second));
  if (second > first) {
    p.between.assign(stream.begin() + static_cast<std::ptrdiff_t>(first + 1),
                     stream.begin() + static_cast<std::ptrdiff_t>(second));
  }
  p.between_after.assign(stream.begin() + static_cast<std::ptrdiff_t>(first + 1),
                         stream.end());
  return p;
}

FeatureBag context_ngram_bag(std::span<const Token> tokens, EntityPair entities,
                             int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  const ContextPatterns p = context_patterns(tokens, entities);
  FeatureBag bag;
  add_ngrams(bag, "fore_between", p.fore_between, n_max);
  add_ngrams(bag, "between", p.between, n_max);
  add_ngrams(bag, "between_after", p.between_after, n_max);
  return bag;
}

SparseVector context_ngram_features(std::span<const Token> tokens,
                                    EntityPair entities,
                                    const Vocabulary &vocabulary, int n_max) {
  return encode(context_ngram_bag(tokens, entities, n_max), vocabulary);
}

std::string_view word_shape(std::string_view s) {
  bool upper = false;
  bool lower = false;
  bool digit = false;
  for (char c : s) {
    upper |= is_upper(c);
    lower |= is_lower(c);
    digit |= is_digit(c);
  }
  if (!upper && !lower) return digit ? "digit" : "other";
  if (digit) return "mixed";
  if (!upper) return "lower";
  if (!lower) return "allcaps";
  if (is_upper(s.front())) {
    bool rest_lower = true;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (is_upper(s[i])) rest_lower = false;
    }
    if (rest_lower) return "capitalized";
  }
  return "mixed";
}

FeatureBag local_context_bag(std::span<const Token> tokens, EntityPair entities,
                             int window) {
  if (window < 1) throw std::invalid_argument("window must be >= 1");
  FeatureBag bag;
  const auto emit = [&](std::string_view role, TokenRange self,
                        TokenRange other, std::string_view other_name) {
    for (int d = 1; d <= window; ++d) {
      for (int sign : {-1, +1}) {
        const std::string prefix = std::string(role) + ":" +
                                   (sign < 0 ? "-" : "+") + std::to_string(d) +
                                   ":";
        const long pos = sign < 0 ? static_cast<long>(self.begin) - d
                                  : static_cast<long>(self.end) - 1 + d;
        if (pos < 0 || pos >= static_cast<long>(tokens.size())) {
          bag[prefix + "PAD"] = 1.0;
          continue;
        }
        const auto idx = static_cast<std::size_t>(pos);
        const Token &t = tokens[idx];
        if (other.contains(idx)) {
          bag[prefix + "w=" + std::string(other_name)] = 1.0;
          continue;
        }
        bag[prefix + "w=" + t.lower] = 1.0;
        bag[prefix + "shape=" + std::string(word_shape(t.surface))] = 1.0;
        bag[prefix + "punct=" + (t.kind == TokenKind::kPunct ? "1" : "0")] = 1.0;
      }
    }
  };
  emit("snp", entities.snp, entities.phenotype, kPhenotypePlaceholder);
  emit("phen", entities.phenotype, entities.snp, kSnpPlaceholder);
  return bag;
}

SparseVector local_context_features(std::span<const Token> tokens,
                                    EntityPair entities,
                                    const Vocabulary &vocabulary, int window) {
  return encode(local_context_bag(tokens, entities, window), vocabulary);
}

}  // namespace snpassoc
