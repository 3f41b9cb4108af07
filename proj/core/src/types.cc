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

#include "snpassoc/types.h"

#include "strings.h"

namespace snpassoc {

std::string_view to_string(EntityKind kind) {
  return kind == EntityKind::kSnp ? "SNP" : "Phenotype";
}

std::string_view to_string(GoldLabel label) {
  switch (label) {
    case GoldLabel::kPositive: return "Positive";
    case GoldLabel::kNegative: return "Negative";
    case GoldLabel::kNeutral: return "Neutral";
  }
  return "?";
}

std::string_view to_string(ConfidenceLevel level) {
  switch (level) {
    case ConfidenceLevel::kLow: return "Low";
    case ConfidenceLevel::kMedium: return "Medium";
    case ConfidenceLevel::kHigh: return "High";
  }
  return "?";
}

std::string_view to_string(SplitTag tag) {
  switch (tag) {
    case SplitTag::kUnsplit: return "Unsplit";
    case SplitTag::kTrain: return "Train";
    case SplitTag::kTest: return "Test";
  }
  return "?";
}

std::optional<EntityKind> parse_entity_kind(std::string_view text) {
  const std::string lower = strings::to_lower(text);
  if (lower == "snp") return EntityKind::kSnp;
  if (lower == "phenotype") return EntityKind::kPhenotype;
  return std::nullopt;
}

std::optional<GoldLabel> parse_gold_label(std::string_view text) {
  const std::string lower = strings::to_lower(text);
  if (lower == "positive") return GoldLabel::kPositive;
  if (lower == "negative") return GoldLabel::kNegative;
  if (lower == "neutral") return GoldLabel::kNeutral;
  return std::nullopt;
}

std::optional<ConfidenceLevel> parse_confidence(std::string_view text) {
  const std::string lower = strings::to_lower(text);
  if (lower == "low") return ConfidenceLevel::kLow;
  if (lower == "medium") return ConfidenceLevel::kMedium;
  if (lower == "high") return ConfidenceLevel::kHigh;
  return std::nullopt;
}

}  // namespace snpassoc
