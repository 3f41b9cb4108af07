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

#include "snpassoc/markers.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <regex>
#include <stdexcept>
#include <string>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "snpassoc/error.h"
#include "strings.h"

namespace snpassoc {

std::string_view to_string(ModalTier tier) {
  switch (tier) {
    case ModalTier::kHedge:
      return "Hedge";
    case ModalTier::kNeutral:
      return "Neutral";
    case ModalTier::kBooster:
      return "Booster";
  }
  return "?";
}

std::optional<ModalTier> parse_modal_tier(std::string_view text) {
  const std::string t = strings::to_lower(strings::trim(text));
  if (t == "hedge") return ModalTier::kHedge;
  if (t == "neutral") return ModalTier::kNeutral;
  if (t == "booster") return ModalTier::kBooster;
  return std::nullopt;
}

std::vector<ModalMarker> detect_modal_markers(std::span<const Token> tokens,
                                              const PhraseLexicon &lexicon) {
  std::vector<ModalMarker> out;
  for (const PhraseMatch &m : match_phrases(tokens, lexicon)) {
    const std::optional<ModalTier> tier =
        m.entry->flags.empty() ? std::nullopt
                               : parse_modal_tier(m.entry->flags.front());
    if (!tier) {
      throw ParseError("modality lexicon",
                       "entry '" + m.entry->phrase + "' has no valid tier");
    }
    ModalMarker marker;
    marker.phrase = m.entry->phrase;
    marker.tokens = m.tokens;
    marker.span = {tokens[m.tokens.begin].span.start,
                   tokens[m.tokens.end - 1].span.end};
    marker.tier = *tier;
    out.push_back(std::move(marker));
  }
  return out;
}

std::string_view to_string(Comparator cmp) {
  switch (cmp) {
    case Comparator::kEq:
      return "=";
    case Comparator::kLt:
      return "<";
    case Comparator::kLe:
      return "<=";
    case Comparator::kGt:
      return ">";
    case Comparator::kGe:
      return ">=";
  }
  return "?";
}

double PValueMention::upper_bound() const {
  return comparator == Comparator::kGt || comparator == Comparator::kGe ? 1.0
                                                                        : value;
}

namespace {

const std::regex &pvalue_pattern() {
  // 1: leading context, 2: p, 3: operator, 4: mantissa,
  // 5/6: e-notation sign/exponent, 7/8: "x 10^" sign/exponent.
  static const std::regex re(
      R"((^|[^A-Za-z0-9_])([pP])(?:\s*-?\s*[vV]alues?)?\s*)"
      R"((<=|>=|=<|=>|≤|≦|≥|≧|<|>|=)\s*)"
      R"((\d*\.?\d+))"
      R"((?:\s*[eE]\s*(-|−|\+)?\s*(\d+)|\s*(?:x|X|×|\*|·)\s*10\s*\^?\s*(-|−|\+)?\s*(\d+))?)",
      std::regex::ECMAScript | std::regex::optimize);
  return re;
}

Comparator comparator_of(const std::string &op) {
  if (op == "=") return Comparator::kEq;
  if (op == "<") return Comparator::kLt;
  if (op == ">") return Comparator::kGt;
  if (op == "<=" || op == "=<" || op == "≤" || op == "≦") return Comparator::kLe;
  return Comparator::kGe;
}

double parse_double(const std::string &s) {
  double v = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), v);
  return v;
}

}  // namespace

std::vector<PValueMention> extract_pvalues(std::string_view text) {
  std::vector<PValueMention> out;
  const std::string owned(text);
  for (auto it = std::sregex_iterator(owned.begin(), owned.end(),
                                      pvalue_pattern());
       it != std::sregex_iterator(); ++it) {
    const std::smatch &m = *it;
    double value = parse_double(m[4].str());
    int exponent = 0;
    bool has_exponent = false;
    for (int g : {5, 7}) {
      if (m[g + 1].matched) {
        exponent = std::stoi(m[g + 1].str());
        if (m[g].matched && m[g].str() != "+") exponent = -exponent;
        has_exponent = true;
      }
    }
    if (has_exponent) value *= std::pow(10.0, exponent);
    const std::size_t start = static_cast<std::size_t>(m.position(2));
    const std::size_t end = static_cast<std::size_t>(m.position(0) + m.length(0));
    if (!(value > 0.0 && value <= 1.0) || !std::isfinite(value)) {
      spdlog::warn("dropping p-value '{}': {} is outside (0, 1]",
                   owned.substr(start, end - start), value);
      continue;
    }
    out.push_back({{start, end}, comparator_of(m[3].str()), value});
  }
  return out;
}

PValueBuckets::PValueBuckets() : thresholds_{0.001, 0.05} {}

PValueBuckets::PValueBuckets(std::vector<double> thresholds)
    : thresholds_(std::move(thresholds)) {
  for (std::size_t i = 0; i < thresholds_.size(); ++i) {
    const double t = thresholds_[i];
    if (!(t > 0.0 && t <= 1.0) || (i > 0 && !(thresholds_[i - 1] < t))) {
      throw std::invalid_argument(
          "p-value thresholds must be ascending values in (0, 1]");
    }
  }
}

PValueBuckets PValueBuckets::parse(std::string_view text) {
  std::vector<double> values;
  for (std::string_view piece : strings::split(text, ',')) {
    const std::string t(strings::trim(piece));
    if (t.empty()) continue;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size()) {
      throw std::invalid_argument("bad p-value threshold '" + t + "'");
    }
    values.push_back(v);
  }
  return PValueBuckets(std::move(values));
}

std::size_t PValueBuckets::bucket_of(const PValueMention &mention) const {
  const double bound = mention.upper_bound();
  const bool strict = mention.comparator == Comparator::kLt;
  for (std::size_t i = 0; i < thresholds_.size(); ++i) {
    if (bound < thresholds_[i] || (strict && bound <= thresholds_[i])) return i;
  }
  return thresholds_.size();
}

std::string PValueBuckets::bucket_name(std::size_t bucket) const {
  if (thresholds_.empty()) return "any";
  if (bucket == 0) return fmt::format("p<{}", thresholds_.front());
  if (bucket >= thresholds_.size()) {
    return fmt::format("p>={}", thresholds_.back());
  }
  return fmt::format("{}<=p<{}", thresholds_[bucket - 1], thresholds_[bucket]);
}

}  // namespace snpassoc
