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

#include <algorithm>
#include <cstdint>

#include "snpassoc/textproc.h"
#include "strings.h"

namespace snpassoc {
namespace {

struct CodePoint {
  std::uint32_t value = 0;
  std::size_t length = 1;
  bool valid = false;
};

CodePoint decode(std::string_view text, std::size_t pos) {
  const auto byte = [&](std::size_t i) {
    return static_cast<unsigned char>(text[i]);
  };
  const unsigned char lead = byte(pos);
  if (lead < 0x80) return {lead, 1, true};
  std::size_t length = 0;
  std::uint32_t value = 0;
  if ((lead & 0xe0) == 0xc0) {
    length = 2;
    value = lead & 0x1f;
  } else if ((lead & 0xf0) == 0xe0) {
    length = 3;
    value = lead & 0x0f;
  } else if ((lead & 0xf8) == 0xf0) {
    length = 4;
    value = lead & 0x07;
  } else {
    return {lead, 1, false};
  }
  if (pos + length > text.size()) return {lead, 1, false};
  for (std::size_t i = 1; i < length; ++i) {
    const unsigned char c = byte(pos + i);
    if ((c & 0xc0) != 0x80) return {lead, 1, false};
    value = (value << 6) | (c & 0x3f);
  }
  return {value, length, true};
}

bool is_space_cp(std::uint32_t cp) {
  if (cp < 0x80) return strings::is_space(static_cast<char>(cp));
  return cp == 0xa0 || (cp >= 0x2000 && cp <= 0x200b) || cp == 0x202f ||
         cp == 0x205f || cp == 0x3000 || cp == 0xfeff;
}

bool is_ascii_alnum(std::uint32_t cp) {
  return (cp >= '0' && cp <= '9') || (cp >= 'a' && cp <= 'z') ||
         (cp >= 'A' && cp <= 'Z');
}

bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }

// Non-ASCII code points outside the punctuation and symbol blocks count as
// letters, which keeps Greek letters and accented words inside word runs.
bool is_alnum_cp(const CodePoint &cp) {
  if (!cp.valid) return false;
  const std::uint32_t v = cp.value;
  if (v < 0x80) return is_ascii_alnum(v);
  if (is_space_cp(v)) return false;
  if (v >= 0xa1 && v <= 0xbf) return false;
  if (v == 0xd7 || v == 0xf7) return false;
  if (v >= 0x2010 && v <= 0x2bff) return false;
  if (v >= 0x3000 && v <= 0x303f) return false;
  if (v >= 0xfe30 && v <= 0xfe4f) return false;
  if (v >= 0xff01 && v <= 0xff0f) return false;
  return true;
}

bool is_punct_cp(std::uint32_t v) {
  switch (v) {
    case '.': case ',': case ';': case ':': case '!': case '?': case '(':
    case ')': case '[': case ']': case '{': case '}': case '"': case '\'':
    case '`': case '-': case '/':
      return true;
    default:
      break;
  }
  return (v >= 0x2010 && v <= 0x2027) || v == 0xab || v == 0xbb ||
         v == 0xa1 || v == 0xbf;
}

bool alnum_at(std::string_view text, std::size_t pos) {
  return pos < text.size() && is_alnum_cp(decode(text, pos));
}

// Length of an apostrophe at `pos` (ASCII or U+2019), 0 if none.
std::size_t apostrophe_at(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) return 0;
  if (text[pos] == '\'') return 1;
  if (text.substr(pos, 3) == "\xe2\x80\x99") return 3;
  return 0;
}

Token make_token(std::string_view text, std::size_t start, std::size_t end,
                 TokenKind kind) {
  Token token;
  token.surface = std::string(text.substr(start, end - start));
  token.span = {start, end};
  token.kind = kind;
  token.lower = strings::to_lower(token.surface);
  return token;
}

TokenKind run_kind(std::string_view run) {
  if (!is_ascii_digit(run.front())) return TokenKind::kWord;
  for (char c : run) {
    if (!is_ascii_digit(c) && c != '.') return TokenKind::kWord;
  }
  return TokenKind::kNumber;
}

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::kWord: return "Word";
    case TokenKind::kNumber: return "Number";
    case TokenKind::kPunct: return "Punct";
    case TokenKind::kSymbol: return "Symbol";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const CodePoint cp = decode(text, pos);
    if (cp.valid && is_space_cp(cp.value)) {
      pos += cp.length;
      continue;
    }
    if (!is_alnum_cp(cp)) {
      const TokenKind kind = cp.valid && is_punct_cp(cp.value)
                                 ? TokenKind::kPunct
                                 : TokenKind::kSymbol;
      tokens.push_back(make_token(text, pos, pos + cp.length, kind));
      pos += cp.length;
      continue;
    }

    const std::size_t start = pos;
    std::size_t end = pos;
    bool clitic = false;
    while (end < text.size()) {
      const CodePoint next = decode(text, end);
      if (is_alnum_cp(next)) {
        end += next.length;
        continue;
      }
      const char c = text[end];
      if (c == '-' && alnum_at(text, end + 1)) {
        ++end;
        continue;
      }
      if (c == '.' && is_ascii_digit(text[end - 1]) && end + 1 < text.size() &&
          is_ascii_digit(text[end + 1])) {
        ++end;
        continue;
      }
      // "...n't" followed by a non-letter splits into host + "n't".
      const std::size_t apos = apostrophe_at(text, end);
      if (apos != 0 && (text[end - 1] == 'n' || text[end - 1] == 'N') &&
          end + apos < text.size() &&
          (text[end + apos] == 't' || text[end + apos] == 'T') &&
          !alnum_at(text, end + apos + 1)) {
        clitic = true;
        if (end - 1 > start) {
          tokens.push_back(make_token(
              text, start, end - 1,
              run_kind(text.substr(start, end - 1 - start))));
        }
        tokens.push_back(
            make_token(text, end - 1, end + apos + 1, TokenKind::kWord));
        pos = end + apos + 1;
      }
      break;
    }
    if (clitic) continue;
    tokens.push_back(
        make_token(text, start, end, run_kind(text.substr(start, end - start))));
    pos = end;
  }
  return tokens;
}

Span char_span(const std::vector<Token> &tokens, TokenRange range) {
  if (range.empty() || range.end > tokens.size()) return {};
  return {tokens[range.begin].span.start, tokens[range.end - 1].span.end};
}

TokenRange token_range_for(const std::vector<Token> &tokens, Span span) {
  TokenRange range{tokens.size(), tokens.size()};
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].span.overlaps(span)) {
      if (range.begin == tokens.size()) range.begin = i;
      range.end = i + 1;
    }
  }
  if (range.begin == tokens.size()) return {0, 0};
  return range;
}

std::vector<ClauseSpan> segment_clauses(std::span<const Token> tokens,
                                        const PhraseLexicon &connectors) {
  std::vector<ClauseSpan> clauses;
  if (tokens.empty()) return clauses;

  struct Boundary {
    std::size_t position;
    const PhraseMatch *opener;
  };
  const std::vector<PhraseMatch> matches = match_phrases(tokens, connectors);
  std::vector<Boundary> boundaries{{0, nullptr}};
  for (const PhraseMatch &m : matches) {
    if (m.tokens.begin == 0) {
      boundaries.front().opener = &m;
    } else {
      boundaries.push_back({m.tokens.begin, &m});
    }
  }
  const auto has_boundary = [&](std::size_t position) {
    return std::any_of(boundaries.begin(), boundaries.end(),
                       [&](const Boundary &b) { return b.position == position; });
  };
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    if (tokens[i].surface == ";" && !has_boundary(i + 1)) {
      boundaries.push_back({i + 1, nullptr});
    }
  }
  // Fronted subordinate clause: "Although X, Y ..." closes at the comma.
  if (boundaries.front().opener != nullptr) {
    std::size_t next = tokens.size();
    for (const Boundary &b : boundaries) {
      if (b.position > 0) next = std::min(next, b.position);
    }
    for (std::size_t i = boundaries.front().opener->tokens.end; i < next; ++i) {
      if (tokens[i].surface == ",") {
        if (i + 1 < next) boundaries.push_back({i + 1, nullptr});
        break;
      }
    }
  }
  std::sort(boundaries.begin(), boundaries.end(),
            [](const Boundary &a, const Boundary &b) {
              return a.position < b.position;
            });

  for (std::size_t k = 0; k < boundaries.size(); ++k) {
    ClauseSpan clause;
    clause.tokens.begin = boundaries[k].position;
    clause.tokens.end =
        k + 1 < boundaries.size() ? boundaries[k + 1].position : tokens.size();
    if (const PhraseMatch *opener = boundaries[k].opener) {
      clause.opened_by = opener->entry->phrase;
      clause.opener = opener->tokens;
      clause.concessive = opener->entry->has_flag("concessive");
    }
    clauses.push_back(std::move(clause));
  }
  return clauses;
}

std::size_t clause_of(std::span<const ClauseSpan> clauses, std::size_t index) {
  for (std::size_t k = 0; k < clauses.size(); ++k) {
    if (clauses[k].tokens.contains(index)) return k;
  }
  return clauses.size();
}

std::vector<EntityMention> recognize_snps(std::span<const Token> tokens,
                                          std::string_view text) {
  std::vector<EntityMention> mentions;
  for (const Token &token : tokens) {
    const std::string &w = token.lower;
    if (w.size() < 3 || w.size() > 12 || w[0] != 'r' || w[1] != 's') continue;
    if (!std::all_of(w.begin() + 2, w.end(), is_ascii_digit)) continue;
    mentions.push_back(
        make_mention(text, EntityKind::kSnp, token.span, token.surface));
  }
  return mentions;
}

std::vector<EntityMention> recognize_phenotypes(
    std::span<const Token> tokens, std::string_view text,
    const PhraseLexicon &gazetteer) {
  std::vector<EntityMention> mentions;
  for (const PhraseMatch &m : match_phrases(tokens, gazetteer)) {
    const Span span{tokens[m.tokens.begin].span.start,
                    tokens[m.tokens.end - 1].span.end};
    mentions.push_back(
        make_mention(text, EntityKind::kPhenotype, span, m.entry->phrase));
  }
  return mentions;
}

std::vector<CandidatePair> enumerate_candidates(const Sentence &sentence) {
  std::vector<std::size_t> snps;
  std::vector<std::size_t> phenotypes;
  for (std::size_t i = 0; i < sentence.mentions.size(); ++i) {
    (sentence.mentions[i].kind == EntityKind::kSnp ? snps : phenotypes)
        .push_back(i);
  }
  const auto by_start = [&](std::size_t a, std::size_t b) {
    return sentence.mentions[a].span.start < sentence.mentions[b].span.start;
  };
  std::stable_sort(snps.begin(), snps.end(), by_start);
  std::stable_sort(phenotypes.begin(), phenotypes.end(), by_start);

  std::vector<CandidatePair> candidates;
  for (std::size_t s : snps) {
    for (std::size_t p : phenotypes) {
      CandidatePair pair;
      pair.id = sentence.id + ".c" + std::to_string(candidates.size());
      pair.snp = s;
      pair.phenotype = p;
      candidates.push_back(std::move(pair));
    }
  }
  return candidates;
}

Sentence analyze_raw_sentence(std::string id, std::string text,
                              const PhraseLexicon &gazetteer) {
  Sentence sentence;
  sentence.id = std::move(id);
  sentence.text = std::move(text);
  const std::vector<Token> tokens = tokenize(sentence.text);
  sentence.mentions = recognize_snps(tokens, sentence.text);
  for (EntityMention &m :
       recognize_phenotypes(tokens, sentence.text, gazetteer)) {
    sentence.mentions.push_back(std::move(m));
  }
  std::stable_sort(sentence.mentions.begin(), sentence.mentions.end(),
                   [](const EntityMention &a, const EntityMention &b) {
                     return a.span.start < b.span.start;
                   });
  sentence.candidates = enumerate_candidates(sentence);
  return sentence;
}

}  // namespace snpassoc
