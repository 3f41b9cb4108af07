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

#include "snpassoc/lexicon.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "snpassoc/error.h"
#include "strings.h"

namespace snpassoc {
namespace {

std::string join_key(std::span<const std::string> words) {
  std::string key;
  for (const std::string &w : words) {
    if (!key.empty()) key.push_back(' ');
    key += w;
  }
  return key;
}

}  // namespace

bool LexiconEntry::has_flag(std::string_view flag) const {
  return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

void PhraseLexicon::add(std::string_view phrase,
                        std::vector<std::string> flags) {
  LexiconEntry entry;
  for (const Token &t : tokenize(phrase)) entry.tokens.push_back(t.lower);
  if (entry.tokens.empty()) {
    throw std::invalid_argument("empty lexicon phrase");
  }
  entry.phrase = join_key(entry.tokens);
  entry.flags = std::move(flags);
  if (index_.count(entry.phrase) != 0) {
    throw std::invalid_argument("duplicate lexicon phrase '" + entry.phrase +
                                "'");
  }
  max_length_ = std::max(max_length_, entry.tokens.size());
  index_.emplace(entry.phrase, entries_.size());
  entries_.push_back(std::move(entry));
}

PhraseLexicon PhraseLexicon::parse(std::string_view content,
                                   std::string_view origin) {
  PhraseLexicon lexicon;
  std::size_t line_no = 0;
  for (std::string_view line : strings::split(content, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::string_view trimmed = strings::trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const std::vector<std::string_view> fields = strings::split(line, '\t');
    std::vector<std::string> flags;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      const std::string_view flag = strings::trim(fields[i]);
      if (!flag.empty()) flags.emplace_back(flag);
    }
    try {
      lexicon.add(strings::trim(fields[0]), std::move(flags));
    } catch (const std::invalid_argument &e) {
      throw ParseError(std::string(origin) + ":" + std::to_string(line_no),
                       e.what());
    }
  }
  return lexicon;
}

PhraseLexicon PhraseLexicon::load(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), "cannot open lexicon file");
  std::ostringstream content;
  content << in.rdbuf();
  return parse(content.str(), path.string());
}

const LexiconEntry *PhraseLexicon::find(
    std::span<const std::string> lowered) const {
  const auto it = index_.find(join_key(lowered));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

std::uint64_t PhraseLexicon::fingerprint() const {
  std::vector<const LexiconEntry *> sorted;
  for (const LexiconEntry &e : entries_) sorted.push_back(&e);
  std::sort(sorted.begin(), sorted.end(),
            [](const LexiconEntry *a, const LexiconEntry *b) {
              return a->phrase < b->phrase;
            });
  strings::Fnv1a hash;
  for (const LexiconEntry *e : sorted) {
    hash.update_field(e->phrase);
    for (const std::string &f : e->flags) hash.update_field(f);
    hash.update("\n");
  }
  return hash.digest();
}

std::vector<PhraseMatch> match_phrases(std::span<const Token> tokens,
                                       const PhraseLexicon &lexicon) {
  std::vector<PhraseMatch> found;
  if (lexicon.empty()) return found;
  std::vector<std::string> window;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::size_t longest =
        std::min(lexicon.max_phrase_length(), tokens.size() - i);
    window.clear();
    for (std::size_t len = 1; len <= longest; ++len) {
      window.push_back(tokens[i + len - 1].lower);
      if (const LexiconEntry *entry = lexicon.find(window)) {
        found.push_back({{i, i + len}, entry});
      }
    }
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const PhraseMatch &a, const PhraseMatch &b) {
                     if (a.tokens.size() != b.tokens.size()) {
                       return a.tokens.size() > b.tokens.size();
                     }
                     return a.tokens.begin < b.tokens.begin;
                   });
  std::vector<bool> taken(tokens.size(), false);
  std::vector<PhraseMatch> chosen;
  for (const PhraseMatch &m : found) {
    bool free = true;
    for (std::size_t k = m.tokens.begin; k < m.tokens.end; ++k) {
      if (taken[k]) {
        free = false;
        break;
      }
    }
    if (!free) continue;
    for (std::size_t k = m.tokens.begin; k < m.tokens.end; ++k) taken[k] = true;
    chosen.push_back(m);
  }
  std::sort(chosen.begin(), chosen.end(),
            [](const PhraseMatch &a, const PhraseMatch &b) {
              return a.tokens.begin < b.tokens.begin;
            });
  return chosen;
}

Lexicons Lexicons::defaults() {
  Lexicons lex;
  lex.cues = PhraseLexicon::parse(default_lexicon_text(DefaultLexicon::kCues),
                                  "default:cues");
  lex.connectors = PhraseLexicon::parse(
      default_lexicon_text(DefaultLexicon::kConnectors), "default:connectors");
  lex.modality = PhraseLexicon::parse(
      default_lexicon_text(DefaultLexicon::kModality), "default:modality");
  lex.triggers = PhraseLexicon::parse(
      default_lexicon_text(DefaultLexicon::kTriggers), "default:triggers");
  lex.gazetteer = PhraseLexicon::parse(
      default_lexicon_text(DefaultLexicon::kGazetteer), "default:gazetteer");
  return lex;
}

}  // namespace snpassoc
