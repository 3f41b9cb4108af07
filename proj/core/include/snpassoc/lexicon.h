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

#ifndef SNPASSOC_LEXICON_H_
#define SNPASSOC_LEXICON_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "snpassoc/token.h"
#include "snpassoc/types.h"

namespace snpassoc {

struct LexiconEntry {
  std::vector<std::string> tokens;  // lowercased
  std::string phrase;               // tokens joined by single spaces
  std::vector<std::string> flags;   // tab-separated fields after the phrase

  bool has_flag(std::string_view flag) const;
};

// A list of lowercase token phrases with optional per-entry flags.
//
// File format: UTF-8, one entry per line, '#' starts a comment line, blank
// lines ignored. Fields are tab separated: the phrase first, then flags
// (e.g. "although\tconcessive", "may\tHedge"). Phrases are tokenized with
// tokenize() so they match the token stream they are applied to.
class PhraseLexicon {
 public:
  PhraseLexicon() = default;

  // Throws ParseError (locator "<origin>:<line>") on duplicates or lines
  // whose phrase tokenizes to nothing.
  static PhraseLexicon parse(std::string_view content,
                             std::string_view origin = "lexicon");
  static PhraseLexicon load(const std::filesystem::path &path);

  void add(std::string_view phrase, std::vector<std::string> flags = {});

  std::span<const LexiconEntry> entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  std::size_t max_phrase_length() const { return max_length_; }

  // Entry whose token sequence equals `lowered`, or nullptr.
  const LexiconEntry *find(std::span<const std::string> lowered) const;

  // Order-independent content hash over phrases and flags.
  std::uint64_t fingerprint() const;

 private:
  std::vector<LexiconEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t max_length_ = 0;
};

struct PhraseMatch {
  TokenRange tokens;
  const LexiconEntry *entry = nullptr;
};

// All non-overlapping phrase occurrences in `tokens`, chosen longest first
// and then leftmost, returned in token order.
std::vector<PhraseMatch> match_phrases(std::span<const Token> tokens,
                                       const PhraseLexicon &lexicon);

// The five lexicons the pipeline consumes.
struct Lexicons {
  PhraseLexicon cues;
  PhraseLexicon connectors;
  PhraseLexicon modality;
  PhraseLexicon triggers;
  PhraseLexicon gazetteer;

  // Built-in lexicons compiled from core/data.
  static Lexicons defaults();
};

enum class DefaultLexicon { kCues, kConnectors, kModality, kTriggers, kGazetteer };
std::string_view default_lexicon_text(DefaultLexicon which);

}  // namespace snpassoc

#endif  // SNPASSOC_LEXICON_H_
