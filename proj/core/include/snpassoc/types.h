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

#ifndef SNPASSOC_TYPES_H_
#define SNPASSOC_TYPES_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace snpassoc {

// Half-open character range [start, end) into a sentence's text.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - start; }
  bool contains(const Span &other) const {
    return start <= other.start && other.end <= end;
  }
  bool overlaps(const Span &other) const {
    return start < other.end && other.start < end;
  }
  friend bool operator==(const Span &, const Span &) = default;
};

// Half-open range of token indices [begin, end).
struct TokenRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool empty() const { return begin >= end; }
  bool contains(std::size_t index) const {
    return begin <= index && index < end;
  }
  bool contains(const TokenRange &other) const {
    return begin <= other.begin && other.end <= end;
  }
  bool overlaps(const TokenRange &other) const {
    return begin < other.end && other.begin < end;
  }
  friend bool operator==(const TokenRange &, const TokenRange &) = default;
};

enum class EntityKind { kSnp, kPhenotype };
enum class GoldLabel { kPositive, kNegative, kNeutral };

// Ordered Low < Medium < High.
enum class ConfidenceLevel { kLow = 0, kMedium = 1, kHigh = 2 };

enum class SplitTag { kUnsplit, kTrain, kTest };

std::string_view to_string(EntityKind kind);
std::string_view to_string(GoldLabel label);
std::string_view to_string(ConfidenceLevel level);
std::string_view to_string(SplitTag tag);

// Case-insensitive parsers for the canonical names above. Return nullopt on
// anything else; callers decide whether that is an error.
std::optional<EntityKind> parse_entity_kind(std::string_view text);
std::optional<GoldLabel> parse_gold_label(std::string_view text);
std::optional<ConfidenceLevel> parse_confidence(std::string_view text);

}  // namespace snpassoc

#endif  // SNPASSOC_TYPES_H_
