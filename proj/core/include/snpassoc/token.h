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

#ifndef SNPASSOC_TOKEN_H_
#define SNPASSOC_TOKEN_H_

#include <string>
#include <string_view>
#include <vector>

#include "snpassoc/types.h"

namespace snpassoc {

enum class TokenKind { kWord, kNumber, kPunct, kSymbol };

struct Token {
  std::string surface;
  Span span;
  TokenKind kind = TokenKind::kWord;
  std::string lower;

  friend bool operator==(const Token &, const Token &) = default;
};

// Splits a sentence into tokens whose spans index `text`.
//
// Runs of letters and digits form one token; a hyphen between two such
// characters stays inside the token ("tobacco-related", "HDL-C"), as does a
// decimal point between digits ("0.043"). Every other non-space character is
// a token of its own. The English clitic "n't" is split off its host
// ("doesn't" -> "does", "n't"). Bytes that do not decode as UTF-8 become
// single Symbol tokens.
std::vector<Token> tokenize(std::string_view text);

std::string_view to_string(TokenKind kind);

// Char span covered by a token range (empty range -> {0,0}).
Span char_span(const std::vector<Token> &tokens, TokenRange range);

// Tokens touching `span`. Empty range when no token overlaps it.
TokenRange token_range_for(const std::vector<Token> &tokens, Span span);

}  // namespace snpassoc

#endif  // SNPASSOC_TOKEN_H_
