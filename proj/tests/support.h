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

#ifndef SNPASSOC_TESTS_SUPPORT_H_
#define SNPASSOC_TESTS_SUPPORT_H_

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "snpassoc/corpus.h"

namespace snpassoc::testing {

inline std::filesystem::path data_path(std::string_view name) {
  return std::filesystem::path(SNPASSOC_TEST_DATA) / name;
}

// The two example sentences with gold entities marked by substring.
inline constexpr std::string_view kApoeSentence =
    "There were no associations between APOE polymorphisms and serum HDL-C, "
    "APO-CIII and triglycerides";
inline constexpr std::string_view kMarkerSentence =
    "Moreover, the rs1051730 variant may not merely operate as a marker for "
    "dependence or heaviness of smoking.";

// Builds a sentence whose mentions are the first occurrences of the given
// substrings, with one candidate per (snp, phenotype) combination.
inline Sentence make_sentence(std::string id, std::string text,
                              const std::vector<std::string> &snps,
                              const std::vector<std::string> &phenotypes,
                              std::optional<GoldLabel> label = std::nullopt,
                              std::optional<ConfidenceLevel> confidence =
                                  std::nullopt) {
  Sentence s;
  s.id = std::move(id);
  s.text = std::move(text);
  auto add = [&](const std::string &surface, EntityKind kind) {
    const std::size_t at = s.text.find(surface);
    if (at == std::string::npos) {
      throw std::logic_error("fixture: '" + surface + "' not in text");
    }
    s.mentions.push_back(
        make_mention(s.text, kind, {at, at + surface.size()}, s.id));
  };
  for (const std::string &x : snps) add(x, EntityKind::kSnp);
  for (const std::string &x : phenotypes) add(x, EntityKind::kPhenotype);
  std::size_t k = 0;
  for (std::size_t i = 0; i < snps.size(); ++i) {
    for (std::size_t j = 0; j < phenotypes.size(); ++j) {
      CandidatePair c;
      c.id = s.id + ".p" + std::to_string(k++);
      c.snp = i;
      c.phenotype = snps.size() + j;
      c.gold_label = label;
      c.gold_confidence = confidence;
      s.candidates.push_back(c);
    }
  }
  return s;
}

inline Corpus one_sentence_corpus(Sentence s) {
  Document d;
  d.id = "doc";
  d.sentences.push_back(std::move(s));
  Corpus c;
  c.documents.push_back(std::move(d));
  return c;
}

}  // namespace snpassoc::testing

#endif  // SNPASSOC_TESTS_SUPPORT_H_
