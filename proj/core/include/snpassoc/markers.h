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

#ifndef SNPASSOC_MARKERS_H_
#define SNPASSOC_MARKERS_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "snpassoc/lexicon.h"
#include "snpassoc/token.h"
#include "snpassoc/types.h"

namespace snpassoc {

enum class ModalTier { kHedge, kNeutral, kBooster };

std::string_view to_string(ModalTier tier);
std::optional<ModalTier> parse_modal_tier(std::string_view text);

struct ModalMarker {
  std::string phrase;
  TokenRange tokens;
  Span span;
  ModalTier tier = ModalTier::kNeutral;

  friend bool operator==(const ModalMarker &, const ModalMarker &) = default;
};

// Longest-match, non-overlapping, ordered by position. Each lexicon entry's
// first flag names its tier; entries without a valid tier throw ParseError.
std::vector<ModalMarker> detect_modal_markers(std::span<const Token> tokens,
                                              const PhraseLexicon &lexicon);

enum class Comparator { kEq, kLt, kLe, kGt, kGe };

std::string_view to_string(Comparator cmp);

struct PValueMention {
  Span span;
  Comparator comparator = Comparator::kEq;
  double value = 0.0;

  // Largest p the mention allows: the value itself, or 1 for > and >=.
  double upper_bound() const;

  friend bool operator==(const PValueMention &, const PValueMention &) = default;
};

// Recognizes "p=0.043", "P < 0.001", "p ≤ 5e-8", "p-value = 0.05",
// "P = 3 x 10^-8" and similar. Values outside (0, 1] are dropped with a
// warning on the default logger.
std::vector<PValueMention> extract_pvalues(std::string_view text);

// Ascending thresholds splitting p into len+1 buckets; defaults to the
// conventional 0.001 and 0.05.
class PValueBuckets {
 public:
  PValueBuckets();
  // Throws std::invalid_argument unless thresholds are in (0,1], ascending.
  explicit PValueBuckets(std::vector<double> thresholds);

  // Parses "0.001,0.05".
  static PValueBuckets parse(std::string_view text);

  const std::vector<double> &thresholds() const { return thresholds_; }
  std::size_t bucket_count() const { return thresholds_.size() + 1; }

  // 0 is the strongest evidence. A strict "<" bound on a threshold falls
  // below it.
  std::size_t bucket_of(const PValueMention &mention) const;
  std::string bucket_name(std::size_t bucket) const;

  friend bool operator==(const PValueBuckets &, const PValueBuckets &) = default;

 private:
  std::vector<double> thresholds_;
};

}  // namespace snpassoc

#endif  // SNPASSOC_MARKERS_H_
